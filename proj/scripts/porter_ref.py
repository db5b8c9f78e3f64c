#!/usr/bin/env python3
"""Reference stemmer used to freeze tests/data/porter_pairs.txt.

Implements the published 1980 suffix-stripping algorithm directly from its
rule tables, in a deliberately different style from the C++ code (suffix
tables + string slicing instead of an in-place buffer), so the two can
serve as independent checks of each other.  The published behaviour is
used throughout: no special guard for one/two-letter words and the
"-abli" -> "-able" mapping of the original rule list.

The AUDITED table holds end-to-end stems derived by hand from the rule
tables; the script refuses to write the pairs file if the implementation
disagrees with any of them.
"""

import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUT = os.path.join(ROOT, "tests", "data", "porter_pairs.txt")

VOWELS = set("aeiou")


def is_cons(word, i):
    ch = word[i]
    if ch in VOWELS:
        return False
    if ch == "y":
        return True if i == 0 else not is_cons(word, i - 1)
    return True


def measure(stem):
    """Number of VC sequences in the [C](VC)^m[V] decomposition."""
    m = 0
    i, n = 0, len(stem)
    while i < n and is_cons(stem, i):
        i += 1
    while True:
        while i < n and not is_cons(stem, i):
            i += 1
        if i >= n:
            return m
        m += 1
        while i < n and is_cons(stem, i):
            i += 1
        if i >= n:
            return m


def has_vowel(stem):
    return any(not is_cons(stem, i) for i in range(len(stem)))


def ends_double_cons(w):
    return len(w) >= 2 and w[-1] == w[-2] and is_cons(w, len(w) - 1)


def ends_cvc(w):
    n = len(w)
    if n < 3:
        return False
    if is_cons(w, n - 1) and not is_cons(w, n - 2) and is_cons(w, n - 3):
        return w[-1] not in "wxy"
    return False


def step1a(w):
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ies"):
        return w[:-2]
    if w.endswith("ss"):
        return w
    if w.endswith("s") and len(w) >= 2:
        return w[:-1]
    return w


def step1b(w):
    if w.endswith("eed"):
        return w[:-1] if measure(w[:-3]) > 0 else w
    for suf in ("ed", "ing"):
        if not w.endswith(suf):
            continue
        stem = w[: -len(suf)]
        if not has_vowel(stem):
            return w
        w = stem
        if w.endswith(("at", "bl", "iz")):
            return w + "e"
        if ends_double_cons(w) and w[-1] not in "lsz":
            return w[:-1]
        if measure(w) == 1 and ends_cvc(w):
            return w + "e"
        return w
    return w


def step1c(w):
    if w.endswith("y") and has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


STEP2 = [
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
]

STEP3 = [
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
]


def apply_table(w, table, min_measure):
    for suf, repl in table:
        if w.endswith(suf):
            stem = w[: -len(suf)]
            if measure(stem) > min_measure:
                return stem + repl
            return w
    return w


STEP4 = [
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
]


def step4(w):
    for suf in STEP4:
        if not w.endswith(suf):
            continue
        stem = w[: -len(suf)]
        if suf == "ion" and not (stem and stem[-1] in "st"):
            return w
        if measure(stem) > 1:
            return stem
        return w
    return w


def step5(w):
    if w.endswith("e"):
        a = measure(w)
        if a > 1 or (a == 1 and not ends_cvc(w[:-1])):
            w = w[:-1]
    if w.endswith("l") and ends_double_cons(w) and measure(w) > 1:
        w = w[:-1]
    return w


def stem(word):
    if not word or not word.isascii() or not word.islower() or not word.isalpha():
        return word
    w = step1a(word)
    w = step1b(w)
    w = step1c(w)
    w = apply_table(w, STEP2, 0)
    w = apply_table(w, STEP3, 0)
    w = step4(w)
    return step5(w)


# End-to-end stems worked out by hand from the rule tables.
AUDITED = {
    "caresses": "caress",
    "ponies": "poni",
    "ties": "ti",
    "caress": "caress",
    "cats": "cat",
    "feed": "feed",
    "agreed": "agre",
    "plastered": "plaster",
    "bled": "bled",
    "motoring": "motor",
    "sing": "sing",
    "troubled": "troubl",
    "hopping": "hop",
    "tanned": "tan",
    "falling": "fall",
    "hissing": "hiss",
    "fizzed": "fizz",
    "failing": "fail",
    "filing": "file",
    "happy": "happi",
    "sky": "sky",
    "conditional": "condit",
    "rational": "ration",
    "digitizer": "digit",
    "operator": "oper",
    "feudalism": "feudal",
    "electricity": "electr",
    "hopeful": "hope",
    "goodness": "good",
    "revival": "reviv",
    "allowance": "allow",
    "inference": "infer",
    "adjustable": "adjust",
    "replacement": "replac",
    "adoption": "adopt",
    "communism": "commun",
    "effective": "effect",
    "probate": "probat",
    "rate": "rate",
    "cease": "ceas",
    "controlling": "control",
    "roll": "roll",
    "generalizations": "gener",
    "oscillators": "oscil",
}

WORDS = """
a about above across act acted acting action actions activate activation
active activity actor actors actual actually add added adding addition
additional adjust adjustable adjusted adjustment adoption agree agreed
agreement agrees airliner all allow allowance allowed almost alone along
already also although always amazing among amount analysis ancient anger
angle angular angularity animal animals announce announced announcement
announcer announcing annoy annoyed another answer answered any anybody
anything appear appearance appeared apple apples apply applying approval
approve approved approximately argue argued argument arguments around
arrange arranged arrangement arrive arrived arriving art article artist
artists as ask asked asking asks ate atomic attend attention attract
attraction audience author authors available average avoid avoided awake
award awarded away awful babies baby back bad badly bag bags baked baking
balance ball balls banana band bands bank banks base baseball based bat
bats battle be bearable beautiful because become becomes becoming bed been
before began begin beginning begins behave behavior being believe believed
bell below best better between big bigger biggest bird birds bit bite
biting bled blow blowing blue board boat boats bodies body boil boiled
book books bored boring born borrow borrowed both bottle bottles bottom
bought box boxes boy boys branch branches bread break breakfast breaking
bridge bright bring bringing broadcast broadcasted broadcasting brother
brothers brought brown build building buildings built buried burn burned
burning bus buses business busy but buy buying cake cakes call called
calling calls calm came camera cameras camp can cannot capable car card
cards care cared careful carefully careless cares caress caresses caring
carried carries carry carrying cars case cases cat catch catching cats
cause caused causes cease ceased celebrate celebrated celebration cell
cells center certain certainly chair chairs chance change changed changes
changing charge charged charges chase chased cheap check checked checking
cheese chief child children choice choose chose church circle cities city
claim claimed class classes classical classes clean cleaned cleaning clear
cleared clearly clever climb climbed climbing clock close closed closely
closing clothes cloud clouds cold collect collected collection college
color colors come comes comfort comfortable coming comment comments
committee common communicate communication communism community companies
company compare compared comparison complete completed completely
completion computer computers concert concerts condition conditional
conditions conference confidence confident conflated conform conformably
confuse confused connect connected connection consider considered
considering contain contained container containing continue continued
continuing control controlled controlling convert converted cook cooked
cooking cool cooled copies copy copied corner correct corrected correctly
cost costs cotton could count counted counter countries country course
courses cover covered covering cow cows crash crashed crashes crashing
create created creating creation creative cried cries critical criticism
crop crops cross crossed crowd crowded cry crying culture cup cups cut
cutting daily dance danced dancer dancers dancing danger dangerous dark
date dates daughter day days dead deal dear death debate debated decide
decided decision decisions decisive decisiveness deep deeply defense
defensible define defined definitely definition degree degrees deliver
delivered delivery demand demanded democracy democratic depend depended
dependent depending depth describe described description desert design
designed desire desired desk detail detailed details develop developed
developing development device devices did die died dies differ difference
differences different differently difficult difficulty digging digital
digitize digitizer dinner direct directed direction directly director
dirty discover discovered discovery discuss discussed discussion disease
distance distant divide divided division do doctor doctors does dog dogs
doing dollar dollars done door doors double doubled doubt down dozen draw
drawing dream dreamed dress dressed dried drink drinking drive driven
driver drivers driving drop dropped dropping drove dry due dug during
dust duties duty each ear early earn earned ears earth easily east easy
eat eaten eating edge edges educate educated education effect effective
effectively effects effort efforts egg eggs eight either elect elected
election electric electrical electricity element elements eleven else
empty enable enabled end ended ending ends enemies enemy energy engine
engines enjoy enjoyed enjoying enough enter entered entering entire
entirely equal equally equip equipment equipped escape escaped especially
establish established establishment evening event events eventually ever
every everybody everyone everything exact exactly examine examined example
examples excellent except exchange excite excited excitement exciting
exercise exist existed existence exists expand expanded expect expected
expensive experience experienced experiment explain explained explanation
explore explored express expressed expression extend extended extension
extra extreme extremely eye eyes face faced faces facing fact factor
factories factory facts fail failed failing fails failure fair fairly
fall fallen falling falls familiar families family famous far farm farmer
farmers farming farms fast faster fastest fat father fault favor favorite
fear feared feed feeding feel feeling feelings feet fell felt festival
festivals few field fields fifteen fifth fifty fight fighting figure
figured file filed files filing fill filled filling film films final
finally find finding fine finger fingers finish finished finishing fire
fired fires firing firm first fish fishing fit fits fitted five fix fixed
fizzed flat flew flies flight float floated floor flow flower flowers
flowing fly flying follow followed following follows food foods foot
football for force forced forces foreign forest forests forget forgot
form formal formalize formality formation formative formed former forming
forms forth fortune forty forward found four fourteen fourth free freedom
freely fresh friend friendly friends from front fruit fruits full fully
fun function functions fund funds funny fur further future gain gained
game games garden gardens gas gather gathered gave general generalization
generalizations generally generate generated generation gentle gentleman
gently get gets getting gift gifts girl girls give given gives giving
glad glass glasses go goes going gold golden gone good goodness goods got
govern government governments governor grab grabbed grain grand grant
granted grass grave gray great greatly green grew ground group groups
grow growing grown growth guard guarded guess guessed guest guests guide
guided gun guns habit habits had hair half hall hand handed handle
handled hands hang hanging happen happened happening happens happily
happiness happy hard harder hardly harm harmful has hat hate hated hats
have having he head headed heading heads health healthy hear heard
hearing heart hearts heat heated heating heavily heavy height held hello
help helped helpful helping helps her here hers herself hidden hide high
higher highest highly hill hills him himself hire hired his historical
histories history hit hits hitting hold holding holds hole holes holiday
holidays home homes honest honor hope hoped hopeful hopefully hopes
hoping hopping horse horses hospital hospitals hot hotel hotels hour
hourly hours house houses housing how however huge human humans hundred
hundreds hungry hunt hunted hunter hunting hurried hurry hurt husband
ice idea ideas identify identity if ill illness image images imagine
imagined immediate immediately importance important impossible impress
impressed impression improve improved improvement in inch inches include
included includes including income increase increased increasing indeed
independence independent indicate indicated industrial industries
industry inference influence influenced inform information informed
initial initially injured injury inner inquiry inside insist insisted
instance instead institution intend intended intense interest interested
interesting interests international interview into introduce introduced
introduction invent invented invention invite invited involve involved
involves involving iron is island islands issue issued issues it item
items its itself job jobs join joined joint joke jokes journey joy judge
judged judgment juice jump jumped jumping just justice keep keeping keeps
kept key keys kick kicked kid kids kill killed kind kinds king kings
kitchen knee knew knife knock knocked know knowing knowledge known knows
labor lack ladder ladies lady laid lake lakes land landed lands language
languages large largely larger largest last lasted late later latest
laugh laughed laughing law laws lay layer lead leader leaders leading
leads leaf league lean learn learned learning least leather leave leaves
leaving led left leg legal legs lend length less lesson lessons let
lets letter letters level levels liberty libraries library lie lies life
lift lifted light lighted lightly lights like liked likely likes liking
limit limited line lines lip lips liquid list listed listen listened
listening lists literature little live lived lively lives living load
loaded local locally located location lock locked long longer longest
look looked looking looks loose lose losing loss lost lot lots loud
loudly love loved lovely loves loving low lower luck lucky lunch machine
machines made magazine magic mail main mainly maintain major majority
make maker makes making man manage managed management manager manner
many map maps march marched mark marked market markets marriage married
marry mass master match matched matches matching material materials
matter mattered matters may maybe me meal meals mean meaning means meant
measure measured meat media medical medicine meet meeting meetings meets
member members memories memory men mention mentioned menu mere merely
message messages metal method methods middle might mile miles milk mind
minds mine minute minutes mirror miss missed missing mistake mistakes
mix mixed mixture model models modern moment moments money month monthly
months moon moral more morning mornings most mostly mother mothers motion
motor motoring mountain mountains mouse mouth move moved movement moves
movie movies moving much mud multiple multiply murder muscle museum music
musical musician must my myself nail name named names narrow nation
national nations native natural naturally nature near nearby nearly neat
necessary neck need needed needing needs neighbor neighbors neither nerve
nervous nest net never new newly news newspaper next nice nicely night
nights nine no noble nobody noise noisy none noon nor normal normally
north nose not note noted notes nothing notice noticed now number
numbers nurse nut nuts obey object objects observe observed obtain
obtained obvious obviously occasion occur occurred ocean of off offer
offered offering office officer officers offices official officials often
oil old older oldest on once one ones only onto open opened opening
opens operate operated operation operations operator operators opinion
opinions opportunity oppose opposed opposite or orange order ordered
orders ordinary organization organizations organize organized origin
original originally other others otherwise ought our ours ourselves out
outer outside over overall owe owed own owned owner owners pass passed
passes passing past paste path patient patients pattern patterns pay
paying payment peace peaceful pen pencil people per perfect perfectly
perform performance performed perhaps period periods permanent permission
permit person personal personally persons phone photo photos phrase
physical pick picked picking picture pictures piece pieces pig pile
pilot pilots pin pink pipe place placed places placing plain plan plane
planes planned planning plans plant planted plants plastic plate plates
play played player players playing plays pleasant please pleased pleasure
plenty pocket poem poems poet point pointed points police policies policy
polish polite political politics pool poor popular popularity population
port position positions positive possible possibly post pot potato pound
pour poured powder power powerful powers practical practice praise
predict predicted prefer preferred preparation prepare prepared presence
present presented president press pressed pressure pretty prevent
prevented previous previously price prices pride primary prince princess
principle print printed printing prison private prize probably problem
problems process produce produced producing product production products
profession professor profit program programs progress project projects
promise promised promote pronounce proof proper properly property propose
proposed protect protected protection proud prove proved provide provided
provides providing public publicly publish published pull pulled pulling
purpose push pushed pushing put puts putting quality quantity quarter
queen question questions quick quickly quiet quietly quite rabbit race
raced radio rail rain rained raise raised raising ran range rapid rapidly
rare rarely rate rates rather reach reached reaching reaction read reader
readers reading ready real reality realize realized really reason
reasonable reasons recall receive received recent recently recognize
recognized record recorded records recover red reduce reduced reduction
refer reference referred reflect reflected refuse refused regard region
regions regular regularly reject related relation relational relations
relationship relative relatively release released relief religion
religious rely remain remained remaining remark remarkable remember
remembered remind remove removed repair repeat repeated replace replaced
replacement reply report reported reporter reports represent represented
request requested require required research resident residents resist
respect respond response responsibility responsible rest rested result
resulted results retire retired return returned revival review reviewed
reward rich ride rider riding right rights ring rise rising risk river
rivers road roads rock rocks role roll rolled rolling roof room rooms
root rope rose rough roughly round route row royal rub rubbed rule ruled
ruler rules run runner running runs rush rushed sad sadly safe safely
safety said sail sailed sailing sake salary sale sales salt same sand
sat save saved saving saw say saying says scale scene scenes school
schools science scientific scientist scientists score scored screen
screens sea search searched season seasons seat seats second secondly
seconds secret secretary section sections secure security see seed seeds
seeing seek seem seemed seems seen sees seize seized seldom select
selected selection sell selling send sending sense senses sent sentence
separate separated series serious seriously serve served service services
serving set sets setting settle settled seven several shade shadow shake
shaking shall shape shaped share shared sharp she sheep sheet shelf shell
shine shining ship shipping ships shirt shock shocked shoe shoes shone
shook shoot shooting shop shopping shops shore short shortly shot should
shoulder shout shouted show showed showing shown shows shut sick side
sides sight sign signal signed significant silence silent silly silver
similar similarly simple simply since sincere sing singer singing single
sink sister sisters sit site sites sitting situation six sixth size
sized sizes skill skilled skills skin sky sleep sleeping slept slide
slight slightly slip slipped slow slowly small smaller smallest smart
smell smile smiled smiling smoke smooth snow so social society soft
softly soil sold soldier soldiers solid solution solve solved some
somebody somehow someone something sometimes somewhat somewhere son song
songs sons soon sort sorts sought soul sound sounded sounds soup source
sources south space spaces speak speaker speaking special specific
specifically speech speed spell spelling spend spending spent spirit
spite split spoke spoken sport sports spot spots spread spring springs
square squares staff stage stages stairs stand standard standards
standing stands star stars start started starting starts state stated
statement statements states station stations stay stayed staying steady
steal steam steel step stepped steps stick sticks stiff still stock
stomach stone stones stood stop stopped stopping stops store stored
stores stories storm storms story straight strange stranger stream
street streets strength stress stretch stretched strike string strings
strip strong stronger strongly struck structure struggle stuck student
students studied studies study studying stuff style subject subjects
substance succeed success successful successfully such sudden suddenly
suffer suffered suffering sugar suggest suggested suggestion suit
suitable suited summer sun supper supply support supported suppose
supposed sure surely surface surprise surprised surprising surround
surrounded survey survive survived swim swimming swing system systems
table tables tail take taken takes taking talk talked talking talks tall
tank tanned tape task taste tasted taught tax taxes tea teach teacher
teachers teaching team teams tear tears technical technique technology
telephone television tell telling tells temperature ten tend tended
tendency tends term terms terrible test tested testing tests than thank
thanked thanks that the theater their them themselves then theory there
therefore these they thick thin thing things think thinking third
thirteen thirty this those though thought thousand thousands threat
threaten three threw through throughout throw throwing thrown thus
ticket tickets tie tied ties tight till time timed times tin tiny tip
tired title titles to today together told tomorrow tone tongue tonight
too took tool tools tooth top topic topics total totally touch touched
touching toward towards tower town towns toy toys track trade tradition
traditional traffic train trained training trains transfer translate
translated transport trap travel traveled traveling treat treated
treatment tree trees tremble trial tribe trick tried tries trip trips
troops trouble troubled troubles truck true truly trust trusted truth
try trying tube turn turned turning turns twelve twenty twice two type
types typical under understand understanding understood unfortunately
union unions unique unit united units universe university unless until
unusual up upon upper upset urge urged us use used useful uses using
usual usually valley valuable value values variety various vary vast
vegetable vehicle verb version very victory video view views village
villages violence violent visit visited visitor visitors voice voices
volume vote voted wage wages wait waited waiting wake walk walked
walking walls want wanted wanting wants war warm warmth warn warned
wars was wash washed washing waste watch watched watches watching water
waters wave waved waves way ways we weak wealth weapon wear weather
wedding week weekend weekly weeks weight welcome well went were west
western wet what whatever wheel wheels when whenever where wherever
whether which while whisper white who whole whom whose why wide widely
wife wild will willing win wind window windows winds wine wing wings
winner winning wins winter wire wise wish wished wishes with within
without witness woke woman women won wonder wondered wonderful wood
wooden woods word words wore work worked worker workers working works
world worlds worn worried worries worry worse worst worth would wound
wrap write writer writers writes writing written wrong wrote yard yards
year yearly years yellow yes yesterday yet yield you young younger your
yours yourself youth zero zone
""".split()


def main():
    vocab = sorted(set(WORDS) | set(AUDITED))
    bad = [w for w in sorted(AUDITED) if stem(w) != AUDITED[w]]
    if bad:
        for w in bad:
            print(f"AUDIT MISMATCH {w}: stem()={stem(w)} audited={AUDITED[w]}")
        raise SystemExit("audited stems disagree with the implementation")
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as f:
        for w in vocab:
            f.write(f"{w}\t{stem(w)}\n")
    print(f"wrote {len(vocab)} pairs to {OUT}")


if __name__ == "__main__":
    main()
