#!/usr/bin/env python3
"""Regenerates resources/spell_dictionary.tsv.

The dictionary is a rank-ordered English word list (function words,
common verbs/nouns/adjectives, informal comment vocabulary and software
tutorial vocabulary) expanded with regular inflections. Counts follow a
Zipf curve over the rank so that more frequent words win spell-correction
ties; the absolute values are not meaningful.
"""

import sys
from pathlib import Path

# (word, flags): 'v' verb (regular inflections), 'd' final-consonant
# doubling for -ed/-ing, 'n' noun (plural). No flag: emitted as-is.
WORDS = [
    # core function words (kept in rank order; all stopwords must be here
    # so the spell corrector never rewrites them)
    ("the",""), ("to",""), ("and",""), ("a",""), ("of",""), ("i",""), ("you",""),
    ("it",""), ("in",""), ("is",""), ("that",""), ("for",""), ("this",""), ("on",""),
    ("was",""), ("my",""), ("with",""), ("not",""), ("have",""), ("be",""), ("but",""),
    ("are",""), ("at",""), ("so",""), ("me",""), ("do",""), ("your",""), ("we",""),
    ("can",""), ("all",""), ("they",""), ("he",""), ("she",""), ("will",""), ("what",""),
    ("as",""), ("or",""), ("his",""), ("her",""), ("from",""), ("had",""), ("has",""),
    ("just",""), ("out",""), ("up",""), ("about",""), ("if",""), ("when",""), ("how",""),
    ("there",""), ("no",""), ("one","n"), ("would",""), ("them",""), ("some",""),
    ("an",""), ("by",""), ("who",""), ("were",""), ("did",""), ("been",""), ("now",""),
    ("more",""), ("want","v"), ("know","v"), ("time","n"), ("than",""), ("then",""),
    ("could",""), ("him",""), ("into",""), ("here",""), ("other",""), ("our",""),
    ("really",""), ("go",""), ("its",""), ("only",""), ("us",""), ("these",""),
    ("also",""), ("because",""), ("very",""), ("after",""), ("should",""), ("over",""),
    ("new",""), ("make",""), ("where",""), ("first",""), ("well",""), ("way","n"),
    ("even",""), ("people",""), ("see",""), ("two",""), ("any",""), ("good",""),
    ("most",""), ("why",""), ("down",""), ("off",""), ("such",""), ("may",""),
    ("say",""), ("which",""), ("am",""), ("those",""), ("too",""), ("still",""),
    ("being",""), ("does",""), ("get",""), ("like","v"), ("day","n"), ("man","n"),
    ("thing","n"), ("look","v"), ("before",""), ("great",""), ("back",""), ("much",""),
    ("think","v"), ("work","vn"), ("need","v"), ("come",""), ("take",""), ("year","n"),
    ("use",""), 
    # pronouns/possessives and contraction stems from the stopword list
    ("myself",""), ("ourselves",""), ("ours",""), ("yours",""), ("yourself",""),
    ("yourselves",""), ("himself",""), ("hers",""), ("herself",""), ("itself",""),
    ("their",""), ("theirs",""), ("themselves",""), ("whom",""), ("whose",""),
    ("until",""), ("while",""), ("against",""), ("between",""), ("through",""),
    ("during",""), ("above",""), ("below",""), ("under",""), ("again",""),
    ("further",""), ("once",""), ("each",""), ("few",""), ("both",""), ("own",""), ("same",""),
    ("nor",""), ("don",""), ("doing",""), ("having",""), ("ain",""), ("aren",""),
    ("couldn",""), ("didn",""), ("doesn",""), ("hadn",""), ("hasn",""), ("haven",""),
    ("isn",""), ("ma",""), ("mightn",""), ("mustn",""), ("needn",""), ("shan",""),
    ("shouldn",""), ("wasn",""), ("weren",""), ("won",""), ("wouldn",""), ("s",""),
    ("t",""), ("d",""), ("ll",""), ("m",""), ("o",""), ("re",""), ("ve",""), ("y",""),
    ("u",""), ("ok",""), ("okay",""),
    # irregular verb forms (bases expand separately where regular)
    ("said",""), ("made",""), ("went",""), ("got",""), ("gotten",""), ("came",""),
    ("saw",""), ("seen",""), ("knew",""), ("known",""), ("took",""), ("taken",""),
    ("gave",""), ("given",""), ("found",""), ("told",""), ("thought",""), ("became",""),
    ("left",""), ("felt",""), ("kept",""), ("began",""), ("begun",""), ("brought",""),
    ("spoke",""), ("spoken",""), ("wrote",""), ("written",""), ("stood",""), ("sat",""),
    ("heard",""), ("held",""), ("met",""), ("paid",""), ("ran",""), ("sent",""),
    ("spent",""), ("built",""), ("bought",""), ("taught",""), ("caught",""), ("sold",""),
    ("lost",""), ("meant",""), ("led",""), ("understood",""), ("broke",""), ("broken",""),
    ("chose",""), ("chosen",""), ("drew",""), ("drawn",""), ("drove",""), ("driven",""),
    ("fell",""), ("fallen",""), ("flew",""), ("flown",""), ("forgot",""), ("forgotten",""),
    ("grew",""), ("grown",""), ("woke",""), ("wore",""), ("worn",""), ("threw",""),
    ("thrown",""), ("shown",""), ("done",""), ("gone",""), ("ate",""), ("eaten",""),
    ("fought",""), ("sought",""), ("struck",""), ("stuck",""), ("slept",""), ("dealt",""),
    ("rose",""), ("risen",""), ("laid",""), ("lit",""), ("fed",""), ("hid",""), ("hidden",""),
    # high-frequency verbs
    ("help","v"), ("try",""), ("tried",""), ("tries",""), ("trying",""), ("ask","v"),
    ("feel","v"), ("seem","v"), ("leave","v"), ("call","v"), ("keep","v"), ("start","v"),
    ("show","v"), ("hear","v"), ("play","vn"), ("run","vd"), ("move","v"), ("live","v"),
    ("believe","v"), ("bring","v"), ("happen","v"), ("write","v"), ("sit","vd"),
    ("stand","v"), ("lose","v"), ("pay","v"), ("meet","v"), ("include","v"),
    ("continue","v"), ("set","vd"), ("learn","v"), ("change","vn"), ("lead","v"),
    ("understand","v"), ("watch","v"), ("follow","v"), ("stop","vd"), ("create","v"),
    ("speak","v"), ("read","v"), ("spend","v"), ("grow","v"), ("open","v"), ("walk","v"),
    ("win","vd"), ("teach","v"), ("offer","v"), ("remember","v"), ("consider","v"),
    ("appear","v"), ("buy","v"), ("serve","v"), ("send","v"), ("build","v"), ("stay","v"),
    ("fall","v"), ("cut","vd"), ("reach","v"), ("raise","v"), ("pass","v"), ("sell","v"),
    ("decide","v"), ("return","v"), ("explain","v"), ("hope","v"), ("develop","v"),
    ("carry","v"), ("break","v"), ("receive","v"), ("agree","v"), ("support","v"),
    ("hit","vd"), ("produce","v"), ("eat","v"), ("cover","v"), ("catch","v"),
    ("draw","v"), ("choose","v"), ("point","vn"), ("wait","v"), ("plan","vdn"),
    ("turn","v"), ("talk","v"), ("begin","v"), ("love","v"), ("thank","v"), ("give","v"),
    ("find","v"), ("tell","v"), ("put","vd"), ("mean","v"), ("let","vd"), ("become","v"),
    ("add","v"), ("share","v"), ("save","v"), ("solve","v"), ("check","v"), ("fix","v"),
    ("remove","v"), ("replace","v"), ("repeat","v"), ("require","v"), ("request","vn"),
    ("suggest","v"), ("recommend","v"), ("improve","v"), ("correct","v"), ("complete","v"),
    ("finish","v"), ("miss","v"), ("wish","v"), ("wonder","v"), ("guess","v"),
    ("imagine","v"), ("expect","v"), ("prefer","vd"), ("mention","v"), ("notice","v"),
    ("realize","v"), ("appreciate","v"), ("enjoy","v"), ("deserve","v"), ("respect","vn"),
    ("admire","v"), ("inspire","v"), ("motivate","v"), ("encourage","v"), 
    ("confuse","v"), ("clarify","v"), ("describe","v"), ("define","v"), ("compare","v"),
    ("refer","vd"), ("relate","v"), ("apply","v"), ("practice","v"), ("prepare","v"),
    ("manage","v"), ("handle","v"), ("provide","v"), ("present","v"), ("introduce","v"),
    ("cause","v"), ("close","v"), ("press","v"), ("push","v"), ("pull","v"), ("drop","vd"),
    ("pick","v"), ("select","v"), ("type","v"), ("enter","v"), ("delete","v"),
    ("copy","v"), ("paste","v"), ("search","v"), ("browse","v"), ("visit","v"),
    ("join","v"), ("connect","v"), ("link","vn"), ("post","vn"), ("comment","vn"),
    ("reply","v"), ("answer","vn"), ("question","vn"), ("subscribe","v"), ("unsubscribe","v"),
    ("upload","v"), ("download","v"), ("install","v"), ("uninstall","v"), ("update","v"),
    ("upgrade","v"), ("refresh","v"), ("restart","v"), ("reboot","v"), ("click","v"),
    ("scroll","v"), ("zoom","v"), ("record","v"), ("edit","v"), ("render","v"),
    ("stream","v"), ("view","vn"), ("listen","v"), ("sound","vn"), ("skip","vd"),
    ("pause","v"), ("resume","v"), ("seek","v"), ("test","vn"), ("debug","vd"),
    ("compile","v"), ("execute","v"), ("implement","v"), ("declare","v"), ("initialize","v"),
    ("assign","v"), ("insert","v"), ("sort","v"), ("merge","v"), ("split","v"),
    ("parse","v"), ("print","v"), ("import","v"), ("export","v"),
    ("invoke","v"), ("iterate","v"), ("loop","vn"), ("recurse","v"),
    ("optimize","v"), ("refactor","v"), ("deploy","v"), ("host","v"), ("migrate","v"),
    ("configure","v"), ("customize","v"), ("enable","v"), ("disable","v"), ("allow","v"),
    ("block","v"), ("crash","v"), ("fail","v"), ("succeed","v"), ("retry","v"),
    ("resolve","v"), ("occur","vd"), ("exist","v"), ("contain","v"), ("consist","v"),
    ("depend","v"), ("differ","v"), ("assume","v"), ("suppose","v"), ("state","vn"),
    ("note","vn"), ("list","vn"), ("count","vn"), ("measure","v"), ("calculate","v"),
    ("compute","v"), ("increase","v"), ("decrease","v"), ("reduce","v"), ("divide","v"),
    ("multiply","v"), ("subtract","v"), ("estimate","v"), ("judge","v"), ("rate","vn"),
    ("score","vn"), ("rank","vn"), ("vote","vn"), ("review","vn"), ("report","vn"),
    ("study","vn"), ("research","v"), ("attend","v"), ("graduate","v"), ("major","v"),
    ("fill","v"), ("empty","v"), ("clean","v"), ("clear","v"), ("wash","v"), ("cook","v"),
    ("bake","v"), ("drink","v"), ("sleep","v"), ("wake","v"), ("dream","v"), ("smile","v"),
    ("laugh","v"), ("cry","v"), ("shout","v"), ("sing","v"), ("dance","v"), ("jump","v"),
    ("climb","v"), ("swim","v"), ("ride","v"), ("drive","v"), ("travel","v"), ("arrive","v"),
    ("remain","v"), ("accept","v"), ("refuse","v"), ("deny","v"),
    ("admit","vd"), ("avoid","v"), ("prevent","v"), ("protect","v"), ("attack","v"),
    ("defend","v"), ("destroy","v"), ("damage","v"), ("repair","v"), ("restore","v"),
    ("waste","v"), ("earn","v"), ("owe","v"), ("borrow","v"), ("lend","v"),
    ("donate","v"), ("invest","v"), ("charge","v"), ("cost","v"), ("afford","v"),
    ("gather","v"), ("collect","v"), ("arrange","v"), ("organize","v"),
    ("attach","v"), ("detach","v"), ("wrap","vd"), ("pack","v"), ("ship","vd"),
    ("deliver","v"), ("sign","v"), ("register","v"), ("submit","vd"),
    ("cancel","v"), ("confirm","v"), ("verify","v"), ("validate","v"), ("approve","v"),
    ("reject","v"), ("ignore","v"), ("focus","v"), ("concentrate","v"), ("bother","v"),
    ("annoy","v"), ("disturb","v"), ("interrupt","v"), ("apologize","v"), ("forgive","v"),
    ("blame","v"), ("complain","v"), ("argue","v"), ("discuss","v"), ("debate","v"),
    ("convince","v"), ("persuade","v"), ("promise","v"), ("warn","v"), ("remind","v"),
    ("notify","v"), ("inform","v"), ("announce","v"), ("claim","v"),
    ("prove","v"), ("demonstrate","v"), ("illustrate","v"), ("highlight","v"),
    ("emphasize","v"), ("summarize","v"), ("conclude","v"), 
    # nouns
    ("video","n"), ("channel","n"), ("tutorial","n"), ("lesson","n"), ("course","n"),
    ("class","n"), ("teacher","n"), ("student","n"), ("school","n"), ("college","n"),
    ("university","n"), ("exam","n"), ("interview","n"), ("job","n"), ("career","n"),
    ("skill","n"), ("knowledge",""), ("experience","n"), ("beginner","n"), ("expert","n"),
    ("master","n"), ("genius","n"), ("legend","n"), ("hero","n"), ("friend","n"),
    ("family","n"), ("brother","n"), ("sister","n"), ("mother","n"), ("father","n"),
    ("parent","n"), ("child","n"), ("kid","n"), ("boy","n"), ("girl","n"), ("guy","n"),
    ("woman",""), ("world","n"), ("country","n"), ("city","n"), ("place","n"),
    ("home","n"), ("house","n"), ("room","n"), ("office","n"), ("company","n"),
    ("business","n"), ("team","n"), ("group","n"), ("member","n"), ("community","n"),
    ("audience","n"), ("viewer","n"), ("subscriber","n"), ("fan","n"), ("creator","n"),
    ("content","n"), ("quality","n"), ("voice","n"), ("accent","n"), ("language","n"),
    ("english",""), ("word","n"), ("sentence","n"), ("phrase","n"), ("paragraph","n"),
    ("page","n"), ("book","n"), ("notebook","n"), ("paper","n"),
    ("article","n"), ("blog","n"), ("story","n"), ("news",""), ("information",""),
    ("detail","n"), ("example","n"), ("sample","n"), ("case","n"), ("part","n"),
    ("piece","n"), ("section","n"), ("chapter","n"), ("topic","n"), ("subject","n"),
    ("concept","n"), ("idea","n"), ("theory","n"), ("fact","n"), ("reason","n"),
    ("purpose","n"), ("goal","n"), ("target","n"), ("result","n"), ("effect","n"),
    ("impact","n"), ("benefit","n"), ("advantage","n"), ("problem","n"), ("issue","n"),
    ("error","n"), ("mistake","n"), ("bug","n"), ("solution","n"), 
    ("method","n"), ("approach","n"), ("technique","n"), ("trick","n"), ("tip","n"),
    ("step","n"), ("process","n"), ("procedure","n"), ("instruction","n"), ("guide","n"),
    ("manual","n"), ("documentation",""), ("reference","n"), ("source","n"), ("resource","n"),
    ("tool","n"), ("feature","n"), ("option","n"), ("setting","n"), ("default","n"),
    ("version","n"), ("release","n"), ("level","n"), ("stage","n"), ("phase","n"),
    ("series",""), ("episode","n"), ("season","n"), ("playlist","n"), ("intro","n"),
    ("outro","n"), ("beginning","n"), ("middle","n"), ("end","n"), ("minute","n"),
    ("second","n"), ("hour","n"), ("week","n"), ("month","n"), ("moment","n"),
    ("today",""), ("tomorrow",""), ("yesterday",""), ("tonight",""), ("morning",""),
    ("evening",""), ("night","n"), ("weekend","n"), ("holiday","n"), ("birthday","n"),
    ("life",""), ("money",""), ("price","n"), ("value","n"), ("number","n"),
    ("amount","n"), ("half","n"), ("couple","n"), ("pair","n"), ("dozen","n"),
    ("hundred","n"), ("thousand","n"), ("million","n"), ("billion","n"), ("percent",""),
    ("computer","n"), ("laptop","n"), ("desktop","n"), ("machine","n"), ("device","n"),
    ("phone","n"), ("mobile","n"), ("tablet","n"), ("screen","n"), ("monitor","n"),
    ("display","n"), ("keyboard","n"), ("mouse",""), ("camera","n"), ("microphone","n"),
    ("mic","n"), ("speaker","n"), ("headphone","n"), ("battery","n"), ("charger","n"),
    ("cable","n"), ("wire","n"), ("hardware",""), ("software",""), ("system","n"),
    ("program","n"), ("application","n"), ("app","n"), ("website","n"), ("site","n"),
    ("web",""), ("internet",""), ("online",""), ("offline",""), ("network","n"),
    ("server","n"), ("client","n"), ("database","n"), ("file","n"), ("folder","n"),
    ("directory","n"), ("path","n"), ("document","n"), ("image","n"), ("picture","n"),
    ("photo","n"), ("icon","n"), ("button","n"), ("menu","n"), ("window","n"),
    ("tab","n"), ("browser","n"), ("account","n"), ("user","n"), ("username","n"),
    ("password","n"), ("email","n"), ("message","n"), ("notification","n"), ("alert","n"),
    ("code","n"), ("coding",""), ("programming",""), ("programmer","n"), ("developer","n"),
    ("engineer","n"), ("project","n"), ("repository","n"), ("branch","n"), ("commit","n"),
    ("function","n"), ("variable","n"), ("constant","n"), ("parameter","n"), ("argument","n"),
    ("object","n"), ("array","n"), ("string","n"), ("integer","n"), ("float","n"),
    ("boolean","n"), ("character","n"), ("index","n"), ("key","n"), ("element","n"),
    ("item","n"), ("entry","n"), ("record","n"), ("field","n"), ("table","n"),
    ("column","n"), ("row","n"), ("matrix",""), ("vector","n"), ("algorithm","n"),
    ("structure","n"), ("pattern","n"), ("syntax",""), ("logic",""), ("condition","n"),
    ("statement","n"), ("expression","n"), ("operator","n"), ("operation","n"),
    ("recursion",""), ("iteration","n"), ("complexity",""), ("performance",""),
    ("memory",""), ("storage",""), ("disk","n"), ("stack","n"), ("queue","n"),
    ("tree","n"), ("graph","n"), ("node","n"), ("pointer","n"), ("thread","n"),
    ("library","n"), ("framework","n"), ("package","n"), ("module","n"), ("plugin","n"),
    ("interface","n"), ("api","n"), ("terminal","n"), ("console","n"), ("command","n"),
    ("script","n"), ("shell","n"), ("compiler","n"), ("interpreter","n"), ("editor","n"),
    ("environment","n"), ("output","n"), ("input","n"), ("math",""), ("maths",""),
    ("physics",""), ("chemistry",""), ("biology",""), ("science","n"), ("history",""),
    ("geography",""), ("economics",""), ("statistics",""), ("equation","n"),
    ("formula","n"), ("chart","n"), ("diagram","n"), ("figure","n"), ("model","n"),
    ("data",""), ("dataset","n"), ("analysis",""), ("music",""), ("song","n"),
    ("game","n"), ("movie","n"), ("film","n"), ("art",""), ("design","n"),
    ("style","n"), ("color","n"), ("colour","n"), ("light","n"), 
    ("water",""), ("food","n"), ("coffee",""), ("tea",""), ("car","n"), ("bike","n"),
    ("road","n"), ("street","n"), ("door","n"), ("hand","n"), ("head","n"), ("face","n"),
    ("eye","n"), ("ear","n"), ("mind","n"), ("brain","n"), ("heart","n"), ("body","n"),
    ("health",""), ("doctor","n"), ("god",""), ("sir",""), ("madam",""), ("bro",""),
    ("dude","n"), ("buddy","n"), ("mate","n"), ("folk","n"), ("everyone",""),
    ("everybody",""), ("someone",""), ("somebody",""), ("anyone",""), ("anybody",""),
    ("nobody",""), ("anything",""), ("something",""), ("nothing",""), ("everything",""),
    ("youtube",""), ("google",""), ("facebook",""), ("twitter",""), ("instagram",""),
    ("python",""), ("java",""), ("javascript",""), ("html",""), ("css",""), ("sql",""),
    ("linux",""), ("windows",""), ("android",""), ("mac",""), ("excel",""),
    # adjectives / adverbs / misc
    ("long",""), ("old",""), ("big",""), ("high",""), ("different",""), ("small",""),
    ("large",""), ("next",""), ("early",""), ("young",""), ("important",""),
    ("public",""), ("bad",""), ("able",""), ("best",""), ("better",""), ("sure",""),
    ("free",""), ("low",""), ("late",""), ("hard",""), ("real",""), ("simple",""),
    ("easy",""), ("easier",""), ("easiest",""), ("full",""),
    ("special",""), ("whole",""), ("nice",""), ("happy",""), ("sad",""), ("angry",""),
    ("serious",""), ("ready",""), ("strong",""), ("weak",""), ("possible",""),
    ("impossible",""), ("entire",""), ("main",""), ("short",""), ("wrong",""),
    ("true",""), ("false",""), ("certain",""), ("personal",""), ("difficult",""),
    ("available",""), ("likely",""), ("beautiful",""), ("amazing",""), ("awesome",""),
    ("wonderful",""), ("fantastic",""), ("incredible",""), ("excellent",""),
    ("brilliant",""), ("perfect",""), ("outstanding",""), ("impressive",""),
    ("helpful",""), ("useful",""), ("useless",""), ("valuable",""), ("interesting",""),
    ("informative",""), ("educational",""), ("detailed",""), ("thorough",""),
    ("concise",""), ("funny",""), ("hilarious",""), ("boring",""), ("cool",""),
    ("fine",""), ("alright",""), ("terrible",""), ("horrible",""), ("awful",""),
    ("poor",""), ("cheap",""), ("expensive",""), ("fast",""), ("faster",""),
    ("slow",""), ("slower",""), ("quick",""), ("quickly",""), ("slowly",""),
    ("easily",""), ("clearly",""), ("simply",""), ("exactly",""), ("actually",""),
    ("probably",""), ("maybe",""), ("definitely",""), ("finally",""), ("especially",""),
    ("usually",""), ("basically",""), ("literally",""), ("seriously",""), ("totally",""),
    ("completely",""), ("absolutely",""), ("certainly",""), ("nearly",""), ("almost",""),
    ("already",""), ("always",""), ("sometimes",""), ("often",""), ("rarely",""),
    ("never",""), ("ever",""), ("soon",""), ("later",""), ("ago",""), ("yet",""),
    ("however",""), ("though",""), ("although",""), ("without",""), ("within",""),
    ("every",""), ("another",""), ("either",""), ("neither",""), ("else",""),
    ("instead",""), ("anyway",""), ("anymore",""), ("together",""), ("alone",""),
    ("around",""), ("away",""), ("along",""), ("across",""), ("behind",""),
    ("beside",""), ("beyond",""), ("inside",""), ("outside",""), ("forward",""),
    ("backward",""), ("straight",""), ("ahead",""), ("please",""), ("sorry",""),
    ("welcome",""), ("thanks",""), ("congrats",""), ("congratulations",""),
    ("hello",""), ("hi",""), ("hey",""), ("yeah",""), ("yep",""), ("nope",""),
    ("yes",""), ("wow",""), ("oh",""), ("ah",""), ("hmm",""), ("huh",""), ("lol",""),
    ("haha",""), ("bless",""), ("luck",""), ("lucky",""), ("proud",""), ("glad",""),
    ("grateful",""), ("thankful",""), ("keen",""), ("curious",""), ("confused",""),
    ("loud",""), ("quiet",""), ("deep",""),
    ("basic",""), ("advanced",""), ("intermediate",""),
    ("professional",""), ("official",""), ("original",""), ("similar",""),
    ("related",""), ("specific",""), ("general",""), ("common",""), ("rare",""),
    ("single",""), ("double",""), ("multiple",""), ("several",""), ("various",""),
    ("previous",""), ("current",""), ("recent",""), ("recently",""), ("future",""),
    ("modern",""), ("popular",""), ("famous",""), ("top",""), ("bottom",""),
    ("front",""), ("third",""), ("fourth",""), ("fifth",""),
    ("three",""), ("four",""), ("five",""), ("six",""), ("seven",""), ("eight",""),
    ("nine",""), ("ten",""), ("twenty",""), ("thirty",""), ("fifty",""), ("zero",""),
]


def inflect(word: str, flags: str):
    forms = []
    vowels = "aeiou"
    dbl = word[-1] if flags and "d" in flags else ""
    if "v" in flags:
        if word.endswith("e") and not word.endswith("ee"):
            forms += [word + "s", word + "d", word[:-1] + "ing"]
        elif word.endswith("y") and len(word) > 1 and word[-2] not in vowels:
            forms += [word[:-1] + "ies", word[:-1] + "ied", word + "ing"]
        elif dbl:
            forms += [word + "s", word + dbl + "ed", word + dbl + "ing"]
        else:
            es = word.endswith(("s", "x", "z", "ch", "sh", "o"))
            forms += [word + ("es" if es else "s"), word + "ed", word + "ing"]
    if "n" in flags:
        if word.endswith("y") and len(word) > 1 and word[-2] not in vowels:
            plural = word[:-1] + "ies"
        elif word.endswith(("s", "x", "z", "ch", "sh")):
            plural = word + "es"
        else:
            plural = word + "s"
        if plural not in forms:
            forms.append(plural)
    return forms


def main(out_path: str) -> None:
    entries: dict[str, int] = {}
    rank = 0
    for word, flags in WORDS:
        rank += 1
        base_freq = 3_000_000_000 // rank
        if word not in entries:
            entries[word] = base_freq
        for i, form in enumerate(inflect(word, flags)):
            freq = base_freq // (4 + 2 * i)
            if form not in entries or entries[form] < freq:
                entries[form] = freq
    ordered = sorted(entries.items(), key=lambda kv: (-kv[1], kv[0]))
    with open(out_path, "w", encoding="utf-8") as fh:
        for word, freq in ordered:
            fh.write(f"{word}\t{freq}\n")
    print(f"wrote {len(ordered)} entries to {out_path}")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else str(
        Path(__file__).resolve().parent.parent / "resources" / "spell_dictionary.tsv")
    main(out)
