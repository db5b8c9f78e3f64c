#!/usr/bin/env python3
"""Builds the bundled mini lexicon in WordNet 3.0 database layout.

Outputs index.<pos> / data.<pos> / <pos>.exc under data/wordnet, plus two
oracle tables under tests/data (noun depths and depth-4 roll-ups) computed
here with an independent traversal so the C++ loader can be checked against
them.

Layout is the stock one: data lines are
  offset lex_filenum ss_type w_cnt word lex_id ... p_cnt ptr... | gloss
with 8-digit byte offsets that really are the line's position in the file.
"""

import collections
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUT_DIR = os.path.join(ROOT, "data", "wordnet")
ORACLE_DIR = os.path.join(ROOT, "tests", "data")

HEADER = (
    "  1 This database mirrors the WordNet 3.0 file layout.\n"
    "  2 It is a compact hand-built lexicon for offline use; the word\n"
    "  3 stock is ordinary English but coverage is deliberately small.\n"
    "  4 Lines in this preamble begin with two spaces and are skipped.\n"
)


class Node:
    def __init__(self, key, pos, lemmas, parents, gloss, lexfile, links=()):
        self.key = key
        self.pos = pos
        self.lemmas = lemmas
        self.parents = list(parents)
        self.gloss = gloss
        self.lexfile = lexfile
        self.links = list(links)  # derivational pointers, any pos
        self.children = []


nodes = {}
sense_order = collections.defaultdict(list)  # (pos, lemma) -> [key...]

# Lemmas allowed to carry more than one synset per part of speech; anything
# else appearing twice is a bank typo.
ALLOWED_MULTI = {
    ("n", "storm"), ("n", "crash"), ("n", "game"), ("n", "screen"),
    ("n", "run"), ("n", "broadcast"), ("n", "match"), ("n", "blackout"),
    ("n", "pilot"), ("n", "file"), ("n", "head"), ("n", "current"),
}


def add(key, pos, lemmas, parents, gloss, lexfile=3, links=()):
    if key in nodes:
        raise SystemExit("duplicate node key: " + key)
    if isinstance(lemmas, str):
        lemmas = [lemmas]
    if isinstance(parents, str):
        parents = [parents]
    node = Node(key, pos, lemmas, parents, gloss, lexfile, links)
    nodes[key] = node
    for lemma in lemmas:
        entry = (pos, lemma)
        if sense_order[entry] and entry not in ALLOWED_MULTI:
            raise SystemExit(f"unexpected extra sense for {entry}: {key}")
        sense_order[entry].append(key)
    return key


def leaves(parent, pos, words, lexfile, gloss_of):
    for w in words:
        add(f"{parent}:{w}", pos, w, parent, gloss_of(w), lexfile)


# ---------------------------------------------------------------- skeleton

add("entity", "n", "entity", [],
    "that which is perceived or known or inferred to have its own distinct "
    "existence", 1)

add("physical_entity", "n", "physical_entity", "entity",
    "an entity that has physical existence", 1)
add("abstraction", "n", ["abstraction", "abstract_entity"], "entity",
    "a general concept formed by extracting common features from specific "
    "examples", 1)

add("object", "n", ["object", "physical_object"], "physical_entity",
    "a tangible and visible entity", 1)
add("matter", "n", "matter", "physical_entity",
    "that which has mass and occupies space", 1)
add("thing", "n", "thing", "physical_entity",
    "a separate and self-contained entity", 1)
add("process", "n", ["process", "physical_process"], "physical_entity",
    "a sustained phenomenon marked by gradual changes", 1)

add("event", "n", "event", "abstraction",
    "something that happens at a given place and time", 2)
add("communication", "n", "communication", "abstraction",
    "something that is communicated by or to or between people or groups", 2)
add("attribute", "n", "attribute", "abstraction",
    "an abstraction belonging to or characteristic of an entity", 2)
add("measure", "n", ["measure", "quantity", "amount"], "abstraction",
    "how much there is or how many there are of something", 2)
add("group", "n", ["group", "grouping"], "abstraction",
    "any number of entities considered as a unit", 2)

# ------------------------------------------------------- depth-4 concepts
# The four planted class concepts sit here, alongside enough siblings to
# make a small but honest concept layer.

add("social_event", "n", "social_event", "event",
    "an event characteristic of persons forming groups", 3)
add("happening", "n", ["happening", "occurrence", "occurrent"], "event",
    "an event that happens", 3)
add("act", "n", ["act", "deed", "human_action"], "event",
    "something that people do or cause to happen", 3)

add("broadcast", "n", "broadcast", "communication",
    "message that is transmitted by radio or television", 6)
add("message", "n", ["message", "content"], "communication",
    "what a communication that is about something is about", 6)
add("language_unit", "n", ["language_unit", "linguistic_unit"],
    "communication", "one of the natural units into which linguistic "
    "messages can be analyzed", 6)

add("artifact", "n", ["artifact", "artefact"], "object",
    "a man-made object taken as a whole", 4)
add("natural_object", "n", "natural_object", "object",
    "an object occurring naturally; not made by man", 4)
add("living_thing", "n", ["living_thing", "animate_thing"], "object",
    "a living (or once living) entity", 4)
add("location", "n", "location", "object",
    "a point or extent in space", 4)

add("substance", "n", "substance", "matter",
    "the real physical matter of which a person or thing consists", 5)
add("food", "n", ["food", "nutrient"], "matter",
    "any substance that can be metabolized by an animal to give energy and "
    "build tissue", 5)

add("phenomenon", "n", "phenomenon", "process",
    "any state or process known through the senses", 5)

add("part", "n", ["part", "piece"], "thing",
    "a portion of a natural object", 4)

add("quality", "n", "quality", "attribute",
    "an essential and distinguishing attribute of something", 7)
add("property", "n", "property", "attribute",
    "a basic or essential attribute shared by all members of a class", 7)

add("definite_quantity", "n", "definite_quantity", "measure",
    "a specific measure of amount", 7)

add("organization", "n", ["organization", "organisation"], "group",
    "a group of people who work together", 8)

# --------------------------------------------------- social_event subtree

add("contest", "n", ["contest", "competition"], "social_event",
    "an occasion on which a winner is selected from among two or more "
    "contestants", 3)
add("show", "n", "show", "social_event",
    "a social event involving a public performance or entertainment", 3)
add("ceremony", "n", "ceremony", "social_event",
    "a formal event performed on a special occasion", 3)

leaves("contest", "n",
       ["game", "match", "tournament", "championship", "race", "final",
        "playoff", "derby", "semifinal", "quarterfinal", "rematch",
        "showdown", "qualifier", "marathon", "sprint", "relay", "regatta",
        "decathlon", "slalom", "scrimmage", "tiebreaker", "heat"],
       3, lambda w: f"a contest in which a winner is decided; a {w}")
leaves("show", "n",
       ["concert", "premiere", "gig", "recital", "pageant", "matinee",
        "circus", "opera", "ballet", "musical", "cabaret", "revue",
        "screening", "preview"],
       3, lambda w: f"a public performance; a {w}")
leaves("ceremony", "n",
       ["wedding", "graduation", "inauguration", "coronation", "funeral",
        "baptism", "parade", "festival", "gala", "banquet", "feast", "prom",
        "reunion", "rally", "vigil", "procession", "induction"],
       3, lambda w: f"a ceremony held on a particular occasion; a {w}")

# ------------------------------------------------------ happening subtree

add("natural_event", "n", "natural_event", "happening",
    "an event that happens without direct human agency", 3)
add("mishap", "n", ["mishap", "misadventure"], "happening",
    "an instance of misfortune", 3)
add("trouble", "n", "trouble", "happening",
    "an event causing distress or pain", 3)

leaves("natural_event", "n",
       ["earthquake", "flood", "storm", "hurricane", "tornado", "tsunami",
        "landslide", "avalanche", "blizzard", "drought", "wildfire",
        "hailstorm", "aftershock", "eruption", "cyclone", "monsoon",
        "heatwave", "thaw", "tremor", "sandstorm"],
       3, lambda w: f"a natural event; a {w}")
leaves("mishap", "n",
       ["crash", "wreck", "accident", "collapse", "derailment", "collision",
        "spill", "breakdown", "blowout", "puncture", "shipwreck", "sinking",
        "stampede", "pileup", "capsizing"],
       3, lambda w: f"an unfortunate mishap; a {w}")
leaves("trouble", "n",
       ["scandal", "outage", "riot", "strike", "protest", "panic",
        "shortage", "recall", "fraud", "heist", "robbery", "hoax", "uproar",
        "backlash", "meltdown", "unrest", "standoff", "gridlock",
        "blackout"],
       3, lambda w: f"an event causing public trouble; a {w}")

# ------------------------------------------------------------ act subtree

add("activity", "n", "activity", "act",
    "any specific behavior", 3)
leaves("activity", "n",
       ["work", "play", "exercise", "practice", "training", "rehearsal",
        "workout", "jog", "hike", "swim", "climb", "rescue", "pursuit",
        "escape", "arrival", "departure", "chase", "search", "patrol",
        "errand", "chore", "commute"],
       3, lambda w: f"an activity undertaken by a person; a {w}")
add("act:run", "n", "run", "activity",
    "the act of running; traveling on foot at a fast pace", 3)

# ------------------------------------------------------ broadcast subtree

add("program", "n", ["program", "programme"], "broadcast",
    "a radio or television show", 6)
add("news_program", "n", "news_program", "program",
    "a program devoted to current events", 6)

leaves("program", "n",
       ["telecast", "episode", "finale", "airing", "rerun", "sitcom",
        "documentary", "podcast", "webcast", "simulcast", "miniseries",
        "serial", "docudrama", "telethon", "infomercial", "pilot",
        "broadcast"],
       6, lambda w: f"a broadcast program; a {w}")
leaves("news_program", "n",
       ["newscast", "bulletin", "newsreel", "roundup"],
       6, lambda w: f"a news program; a {w}")

# -------------------------------------------------------- message subtree

add("statement", "n", "statement", "message",
    "a message that is stated or declared", 6)
leaves("statement", "n",
       ["announcement", "declaration", "apology", "denial", "verdict",
        "forecast", "warning", "summary", "quote", "remark", "slogan",
        "caption", "headline", "motto"],
       6, lambda w: f"a statement conveying information; a {w}")
leaves("language_unit", "n",
       ["word", "syllable", "phrase", "sentence", "paragraph", "letter",
        "vowel", "consonant"],
       6, lambda w: f"a unit of language; a {w}")

# ------------------------------------------------------- artifact subtree

add("instrumentality", "n", ["instrumentality", "instrumentation"],
    "artifact", "an artifact designed to accomplish some end", 4)
add("structure", "n", ["structure", "construction"], "artifact",
    "a thing constructed; a complex entity built from parts", 4)
add("covering", "n", "covering", "artifact",
    "an artifact that covers or protects", 4)

add("device", "n", "device", "instrumentality",
    "an instrumentality invented for a particular purpose", 4)
add("machine", "n", "machine", "instrumentality",
    "a device with moving parts that performs work", 4)
add("container", "n", "container", "instrumentality",
    "an object that can be used to hold things", 4)
add("implement", "n", "implement", "instrumentality",
    "a piece of equipment or a tool used for a particular purpose", 4)
add("vehicle", "n", "vehicle", "instrumentality",
    "a conveyance that transports people or objects", 4)

leaves("device", "n",
       ["computer", "laptop", "phone", "gadget", "keyboard", "screen",
        "camera", "server", "tablet", "router", "modem", "sensor", "radio",
        "television", "projector", "printer", "scanner", "console",
        "charger", "headset", "microphone", "speaker", "drone"],
       4, lambda w: f"a device serving a technical purpose; a {w}")
leaves("machine", "n",
       ["engine", "motor", "turbine", "generator", "pump", "compressor",
        "lathe", "crane", "bulldozer", "tractor", "harvester", "loom"],
       4, lambda w: f"a machine with moving parts; a {w}")
leaves("container", "n",
       ["bottle", "box", "crate", "barrel", "bucket", "jar", "basket",
        "bin", "canister", "flask", "keg", "satchel", "suitcase", "tank"],
       4, lambda w: f"a container for holding things; a {w}")
leaves("implement", "n",
       ["hammer", "wrench", "screwdriver", "saw", "drill", "chisel",
        "shovel", "rake", "hoe", "axe", "ax", "mallet", "pliers", "file",
        "trowel", "crowbar", "whisk", "ladle", "spatula", "knife"],
       4, lambda w: f"a hand implement; a {w}")
leaves("vehicle", "n",
       ["car", "truck", "bus", "train", "tram", "boat", "ship", "ferry",
        "yacht", "canoe", "kayak", "sled", "wagon", "scooter", "moped",
        "van", "jeep", "taxi", "ambulance", "snowmobile", "trailer",
        "bicycle", "motorcycle"],
       4, lambda w: f"a vehicle for transport; a {w}")
leaves("structure", "n",
       ["building", "bridge", "tower", "tunnel", "stadium", "arena", "dam",
        "wall", "fence", "warehouse", "hangar", "pavilion", "lighthouse",
        "pier", "silo", "windmill", "scaffold", "gazebo"],
       4, lambda w: f"a constructed structure; a {w}")
leaves("covering", "n",
       ["jacket", "sneaker", "helmet", "glove", "scarf", "blanket",
        "curtain", "carpet", "awning", "tarpaulin", "visor", "apron",
        "poncho", "shroud"],
       4, lambda w: f"a covering artifact; a {w}")

# -------------------------------------------------- other object subtrees

leaves("natural_object", "n",
       ["rock", "stone", "pebble", "boulder", "cliff", "island", "reef",
        "dune", "crater", "moon", "star", "comet", "asteroid", "meteor",
        "iceberg", "geyser", "stalactite", "fossil", "nugget"],
       4, lambda w: f"a naturally occurring object; a {w}")

add("animal", "n", ["animal", "animate_being", "beast"], "living_thing",
    "a living organism characterized by voluntary movement", 9)
add("plant", "n", ["plant", "flora"], "living_thing",
    "a living organism lacking the power of locomotion", 9)
add("person", "n", ["person", "individual", "someone"], "living_thing",
    "a human being", 9)

leaves("animal", "n",
       ["dog", "cat", "horse", "cow", "sheep", "goat", "pig", "rabbit",
        "deer", "fox", "wolf", "bear", "lion", "tiger", "elephant",
        "monkey", "mouse", "rat", "squirrel", "otter", "goose", "duck",
        "swan", "eagle", "hawk", "owl", "crow", "robin", "sparrow",
        "pigeon", "heron", "salmon", "trout", "bass", "cod", "herring",
        "shark", "ant", "bee", "wasp", "beetle", "moth", "butterfly",
        "ox", "donkey", "camel", "llama", "ferret", "hedgehog", "badger"],
       9, lambda w: f"an animal; a {w}")
leaves("plant", "n",
       ["tree", "flower", "grass", "fern", "moss", "oak", "pine", "maple",
        "birch", "willow", "rose", "tulip", "daisy", "lily", "orchid",
        "cactus", "bamboo", "ivy", "clover", "shrub", "leaf"],
       9, lambda w: f"a plant; a {w}")
leaves("person", "n",
       ["child", "man", "woman", "baby", "teacher", "doctor", "nurse",
        "farmer", "singer", "dancer", "writer", "painter", "lawyer",
        "judge", "pilot", "sailor", "soldier", "chef", "waiter", "barber",
        "tailor", "plumber", "carpenter", "miner", "clerk", "coach",
        "referee", "goalie", "striker", "midfielder", "spectator", "fan",
        "critic", "editor", "reporter", "anchor", "producer", "director",
        "actor", "actress", "comedian", "magician", "wife", "husband",
        "lady", "gentleman"],
       9, lambda w: f"a person; a {w}")

leaves("location", "n",
       ["city", "town", "village", "capital", "harbor", "port", "airport",
        "station", "plaza", "square", "park", "avenue", "boulevard",
        "alley", "suburb", "district", "county", "province", "border",
        "coast", "valley", "canyon", "desert", "tundra", "prairie",
        "meadow", "lagoon", "delta", "peninsula", "quay"],
       10, lambda w: f"a location; a {w}")

# ------------------------------------------------- matter and phenomenon

leaves("substance", "n",
       ["water", "ice", "steam", "salt", "sugar", "iron", "copper", "gold",
        "silver", "tin", "lead", "zinc", "oxygen", "hydrogen", "carbon",
        "nitrogen", "helium", "mercury", "concrete", "cement", "sand",
        "clay", "gravel", "rubber", "plastic", "glass", "wool", "cotton",
        "silk", "leather"],
       5, lambda w: f"a substance; {w}")
leaves("food", "n",
       ["bread", "cheese", "butter", "milk", "rice", "pasta", "soup",
        "salad", "steak", "bacon", "sausage", "pizza", "burger",
        "sandwich", "cake", "cookie", "pie", "pudding", "coffee", "tea",
        "juice", "cider", "stew", "porridge", "pancake", "waffle",
        "omelette", "noodle", "dumpling", "tomato", "potato", "carrot",
        "onion", "pepper", "bean", "pea", "lentil", "apple", "banana",
        "orange", "grape", "cherry", "peach", "plum", "mango", "berry"],
       5, lambda w: f"a food; {w}")
leaves("phenomenon", "n",
       ["rainbow", "lightning", "thunder", "fog", "mist", "frost", "dew",
        "wind", "gravity", "magnetism", "friction", "echo", "reflection",
        "aurora", "mirage", "tide", "current", "whirlpool", "updraft"],
       5, lambda w: f"a phenomenon known through the senses; {w}")

add("body_part", "n", "body_part", "part",
    "any part of an organism", 9)
leaves("body_part", "n",
       ["foot", "hand", "arm", "leg", "head", "eye", "ear", "nose",
        "mouth", "tooth", "finger", "thumb", "knee", "elbow", "shoulder",
        "hip", "ankle", "wrist", "spine", "rib"],
       9, lambda w: f"a body part; the {w}")

# Second senses: listed after the planted first sense of the same lemma.
add("phenomenon:storm", "n", "storm", "phenomenon",
    "a violent disturbance of the atmosphere considered as a process", 5)
add("phenomenon:crash", "n", "crash", "phenomenon",
    "a sudden loud noise", 5)
add("activity:game", "n", "game", "activity",
    "an amusement or pastime", 3)
add("covering:screen", "n", "screen", "covering",
    "a partition that protects or conceals", 4)
add("contest:run", "n", "run", "contest",
    "a race run on foot", 3)
add("statement:broadcast", "n", "broadcast", "statement",
    "a message made widely known", 6)
add("device:match", "n", "match", "device",
    "a thin strip tipped with a mixture that ignites when scratched", 4)
add("phenomenon:blackout", "n", "blackout", "phenomenon",
    "a momentary loss of consciousness or of light", 5)

# -------------------------------------------- attribute / measure / group

leaves("quality", "n",
       ["beauty", "strength", "courage", "honesty", "patience", "wisdom",
        "kindness", "loyalty", "charm", "grace", "speed", "accuracy",
        "clarity", "bravery", "humility", "candor", "tenacity", "poise"],
       7, lambda w: f"a quality of a person or thing; {w}")
leaves("property", "n",
       ["weight", "height", "length", "width", "depth", "density",
        "hardness", "texture", "color", "shade", "hue", "luster",
        "opacity", "viscosity"],
       7, lambda w: f"a measurable property; {w}")
leaves("definite_quantity", "n",
       ["dozen", "pair", "couple", "handful", "armful", "spoonful",
        "cupful", "bushel", "gallon", "litre", "metre", "gram", "tonne",
        "acre", "hectare", "fortnight", "decade", "century"],
       7, lambda w: f"a definite quantity; a {w}")
leaves("organization", "n",
       ["company", "firm", "agency", "bureau", "committee", "council",
        "senate", "parliament", "ministry", "league", "club", "union",
        "guild", "syndicate", "charity", "foundation", "academy",
        "institute", "troupe", "orchestra", "choir", "squad", "crew"],
       8, lambda w: f"an organization of people; a {w}")

# ----------------------------------------- deliberate multi-parent nouns

add("crossover", "n", "crossover", ["device", "program"],
    "a design that spans two categories at once", 6)
add("newsflash", "n", ["newsflash", "flash"], ["news_program", "statement"],
    "a short urgent news report", 6)
add("houseboat", "n", "houseboat", ["vehicle", "structure"],
    "a boat fitted out as a dwelling", 4)

# ----------------------------------------------------------------- verbs

VERB_ROOTS = [
    ("v:move", ["move", "displace"], [],
     "cause to move or shift position"),
    ("v:communicate", ["communicate", "intercommunicate"], [],
     "transmit thoughts or feelings"),
    ("v:change", ["change", "alter", "modify"], [],
     "cause to change; make different"),
    ("v:act", ["act"], [],
     "perform an action"),
    ("v:perceive", ["perceive", "comprehend"], [],
     "become aware of through the senses"),
]
VERB_LEAVES = [
    ("v:walk", ["walk"], "v:move", "use one's feet to advance"),
    ("v:run", ["run"], "v:move", "move fast by using one's feet",
     ["act:run"]),
    ("v:jump", ["jump", "leap"], "v:move", "move forward by leaps"),
    ("v:fly", ["fly"], "v:move", "travel through the air"),
    ("v:ride", ["ride"], "v:move", "be carried or travel on or in a vehicle"),
    ("v:drive", ["drive"], "v:move", "operate or control a vehicle"),
    ("v:fall", ["fall"], "v:move", "descend freely under gravity"),
    ("v:throw", ["throw"], "v:move", "propel through the air"),
    ("v:come", ["come"], "v:move", "move toward something"),
    ("v:go", ["go", "travel"], "v:move", "change location"),
    ("v:leave", ["leave", "depart"], "v:move", "go away from a place"),
    ("v:announce", ["announce", "declare"], "v:communicate",
     "make known publicly", ["statement:announcement"]),
    ("v:broadcast", ["broadcast", "air", "transmit"], "v:communicate",
     "cast or send forth over the airwaves", ["broadcast"]),
    ("v:report", ["report", "cover"], "v:communicate",
     "make a written or spoken account of", ["person:reporter"]),
    ("v:say", ["say", "state", "tell"], "v:communicate",
     "express in words"),
    ("v:speak", ["speak", "talk"], "v:communicate",
     "use language to express ideas"),
    ("v:write", ["write"], "v:communicate",
     "communicate by means of written symbols", ["person:writer"]),
    ("v:sing", ["sing"], "v:communicate", "produce musical tones with the "
     "voice", ["person:singer"]),
    ("v:ask", ["ask", "inquire"], "v:communicate",
     "direct a question to someone"),
    ("v:watch", ["watch", "view"], "v:perceive",
     "look attentively at"),
    ("v:see", ["see"], "v:perceive", "perceive by sight"),
    ("v:hear", ["hear"], "v:perceive", "perceive by the auditory sense"),
    ("v:feel", ["feel", "sense"], "v:perceive",
     "perceive by a physical sensation"),
    ("v:know", ["know"], "v:perceive", "be cognizant of a fact"),
    ("v:think", ["think", "believe"], "v:perceive",
     "judge or regard; have as an opinion"),
    ("v:break", ["break"], "v:change", "render inoperable or unusable"),
    ("v:crash", ["crash"], "v:change", "undergo damage or destruction on "
     "impact", ["mishap:crash"]),
    ("v:collapse", ["collapse", "crumble"], "v:change",
     "break down suddenly", ["mishap:collapse"]),
    ("v:flood", ["flood", "inundate"], "v:change",
     "cover or submerge with water", ["natural_event:flood"]),
    ("v:cancel", ["cancel", "scratch"], "v:change",
     "declare null and void"),
    ("v:delay", ["delay", "postpone"], "v:change",
     "cause to be later than planned"),
    ("v:launch", ["launch"], "v:change", "set in motion or get going"),
    ("v:release", ["release", "publish"], "v:change",
     "make available to the public"),
    ("v:update", ["update"], "v:change", "bring up to date"),
    ("v:make", ["make", "create"], "v:act", "bring into existence"),
    ("v:do", ["do", "perform"], "v:act", "carry out an action"),
    ("v:play", ["play"], "v:act", "participate in games or sport",
     ["activity:play"]),
    ("v:win", ["win"], "v:act", "be the victor in a contest"),
    ("v:lose", ["lose"], "v:act", "fail to win"),
    ("v:eat", ["eat"], "v:act", "take in solid food"),
    ("v:drink", ["drink", "imbibe"], "v:act", "take in liquids"),
    ("v:sleep", ["sleep", "slumber"], "v:act", "be asleep"),
    ("v:sit", ["sit"], "v:act", "be seated"),
    ("v:stand", ["stand"], "v:act", "be upright on the feet"),
    ("v:keep", ["keep", "hold"], "v:act", "retain possession of"),
    ("v:give", ["give"], "v:act", "transfer possession of something"),
    ("v:take", ["take"], "v:act", "get into one's hands or possession"),
    ("v:get", ["get", "acquire"], "v:act", "come into possession of"),
    ("v:bring", ["bring"], "v:act", "take something or somebody with "
     "oneself somewhere"),
    ("v:meet", ["meet"], "v:act", "come together with"),
    ("v:pay", ["pay"], "v:act", "give money in exchange for goods"),
    ("v:have", ["have", "possess"], "v:act", "have ownership of"),
    ("v:be", ["be", "exist"], "v:act", "have an existence"),
    ("v:check", ["check", "verify"], "v:perceive",
     "confirm the truth or accuracy of"),
    ("v:stream", ["stream"], "v:communicate",
     "send digital media over a network"),
    ("v:vote", ["vote"], "v:act", "express a choice in an election"),
    ("v:celebrate", ["celebrate", "fete"], "v:act",
     "mark an occasion with festivities", ["ceremony:festival"]),
]

for key, lemmas, parents, gloss in VERB_ROOTS:
    add(key, "v", lemmas, parents, gloss, 30)
for entry in VERB_LEAVES:
    key, lemmas, parent, gloss = entry[0], entry[1], entry[2], entry[3]
    links = entry[4] if len(entry) > 4 else []
    add(key, "v", lemmas, parent, gloss, 31, links)

# ------------------------------------------------------------ adjectives

ADJ_HEADS = [
    ("a:good", ["good"], "having desirable or positive qualities"),
    ("a:bad", ["bad"], "having undesirable or negative qualities"),
    ("a:big", ["big", "large"], "above average in size or number"),
    ("a:small", ["small", "little"], "below average in size or number"),
    ("a:fast", ["fast"], "acting or moving quickly"),
    ("a:slow", ["slow"], "not moving quickly"),
    ("a:new", ["new"], "recently made or come into being"),
    ("a:old", ["old"], "of long duration; not new"),
    ("a:happy", ["happy"], "marked by good fortune or pleasure"),
    ("a:sad", ["sad"], "experiencing sorrow or unhappiness"),
    ("a:hot", ["hot"], "having a high temperature"),
    ("a:cold", ["cold"], "having a low temperature"),
    ("a:bright", ["bright"], "emitting or reflecting much light"),
    ("a:dark", ["dark"], "devoid of or deficient in light"),
    ("a:early", ["early"], "at or near the beginning of a period"),
    ("a:late", ["late"], "at or near the end of a period"),
    ("a:open", ["open"], "affording unobstructed entrance and exit"),
    ("a:busy", ["busy"], "actively engaged in work"),
    ("a:easy", ["easy"], "requiring little effort"),
    ("a:hard", ["hard"], "requiring considerable effort"),
    ("a:free", ["free"], "not bound or constrained"),
    ("a:far", ["far"], "located at a great distance"),
    ("a:live", ["live"], "broadcast while happening"),
    ("a:public", ["public"], "open to all members of the community"),
]
ADJ_SATELLITES = [
    ("s:speedy", ["speedy", "rapid"], "a:fast",
     "characterized by great speed"),
    ("s:sluggish", ["sluggish"], "a:slow", "moving slowly"),
    ("s:joyful", ["joyful", "gleeful"], "a:happy", "full of joy"),
    ("s:gloomy", ["gloomy"], "a:sad", "depressingly dark"),
    ("s:novel", ["novel", "fresh"], "a:new", "original and striking"),
    ("s:ancient", ["ancient"], "a:old", "very old"),
    ("s:scorching", ["scorching"], "a:hot", "extremely hot"),
    ("s:icy", ["icy", "frosty"], "a:cold", "extremely cold"),
]

for key, lemmas, gloss in ADJ_HEADS:
    add(key, "a", lemmas, [], gloss, 0)
for key, lemmas, head, gloss in ADJ_SATELLITES:
    add(key, "s", lemmas, [head], gloss, 0)

# --------------------------------------------------------------- adverbs

ADVERBS = [
    ("r:quickly", ["quickly", "rapidly"], "with speed"),
    ("r:slowly", ["slowly"], "without speed"),
    ("r:soon", ["soon", "shortly"], "in the near future"),
    ("r:often", ["often", "frequently"], "many times at short intervals"),
    ("r:early", ["early"], "before the usual time"),
    ("r:late", ["late"], "after the expected time"),
    ("r:today", ["today"], "on this day"),
    ("r:tonight", ["tonight"], "during the night of the present day"),
    ("r:tomorrow", ["tomorrow"], "on the day after today"),
    ("r:yesterday", ["yesterday"], "on the day before today"),
    ("r:abroad", ["abroad", "overseas"], "in a foreign country"),
    ("r:upstairs", ["upstairs"], "on a higher floor"),
    ("r:everywhere", ["everywhere"], "in every place"),
    ("r:somewhere", ["somewhere"], "in some unspecified place"),
    ("r:twice", ["twice"], "two times"),
    ("r:almost", ["almost", "nearly"], "slightly short of"),
    ("r:together", ["together"], "in contact with each other"),
    ("r:forever", ["forever", "everlastingly"], "for a limitless time"),
]
for key, lemmas, gloss in ADVERBS:
    add(key, "r", lemmas, [], gloss, 2)

# ------------------------------------------------------------ exceptions

NOUN_EXC = [
    ("children", ["child"]),
    ("feet", ["foot"]),
    ("geese", ["goose"]),
    ("men", ["man"]),
    ("mice", ["mouse"]),
    ("teeth", ["tooth"]),
    ("women", ["woman"]),
    ("oxen", ["ox"]),
    ("axes", ["ax", "axe", "axis"]),
    ("leaves", ["leaf"]),
    ("wolves", ["wolf"]),
    ("knives", ["knife"]),
    ("wives", ["wife"]),
    ("phenomena", ["phenomenon"]),
]
VERB_EXC = [
    ("ran", ["run"]), ("went", ["go"]), ("ate", ["eat"]),
    ("brought", ["bring"]), ("broke", ["break"]), ("spoke", ["speak"]),
    ("took", ["take"]), ("threw", ["throw"]), ("flew", ["fly"]),
    ("sang", ["sing"]), ("sung", ["sing"]), ("drank", ["drink"]),
    ("drunk", ["drink"]), ("drove", ["drive"]), ("rode", ["ride"]),
    ("wrote", ["write"]), ("written", ["write"]), ("fell", ["fall"]),
    ("fallen", ["fall"]), ("felt", ["feel"]), ("kept", ["keep"]),
    ("left", ["leave"]), ("made", ["make"]), ("met", ["meet"]),
    ("paid", ["pay"]), ("said", ["say"]), ("sat", ["sit"]),
    ("slept", ["sleep"]), ("stood", ["stand"]), ("told", ["tell"]),
    ("thought", ["think"]), ("won", ["win"]), ("lost", ["lose"]),
    ("was", ["be"]), ("were", ["be"]), ("been", ["be"]), ("is", ["be"]),
    ("are", ["be"]), ("am", ["be"]), ("has", ["have"]), ("had", ["have"]),
    ("did", ["do"]), ("does", ["do"]), ("done", ["do"]), ("saw", ["see"]),
    ("seen", ["see"]), ("gave", ["give"]), ("given", ["give"]),
    ("got", ["get"]), ("gotten", ["get"]), ("came", ["come"]),
    ("knew", ["know"]), ("known", ["know"]), ("heard", ["hear"]),
    ("spoken", ["speak"]), ("taken", ["take"]), ("thrown", ["throw"]),
    ("running", ["run"]), ("sitting", ["sit"]), ("getting", ["get"]),
    ("winning", ["win"]),
]
ADJ_EXC = [
    ("better", ["good"]), ("best", ["good"]), ("worse", ["bad"]),
    ("worst", ["bad"]), ("further", ["far"]), ("farther", ["far"]),
    ("elder", ["old"]), ("eldest", ["old"]),
]

# ----------------------------------------------------------- file layout

POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
POS_OF_KEY = {}
for node in nodes.values():
    POS_OF_KEY[node.key] = "a" if node.pos == "s" else node.pos

for node in nodes.values():
    for parent in node.parents:
        if parent not in nodes:
            raise SystemExit(f"{node.key}: missing parent {parent}")
        nodes[parent].children.append(node.key)
    for link in node.links:
        if link not in nodes:
            raise SystemExit(f"{node.key}: missing link target {link}")

# Deterministic per-file ordering: creation order (dict order).
by_file = collections.defaultdict(list)
for node in nodes.values():
    by_file[POS_OF_KEY[node.key]].append(node)


def data_pos_tag(node):
    return node.pos  # 'n' 'v' 'a' 's' 'r'


def compose_data_line(node, offsets):
    own = offsets[node.key] if offsets else 0
    fields = [f"{own:08d}", f"{node.lexfile:02d}", data_pos_tag(node),
              f"{len(node.lemmas):02x}"]
    for lemma in node.lemmas:
        fields.append(lemma)
        fields.append("0")
    ptrs = []
    for parent in node.parents:
        target = nodes[parent]
        toff = offsets[target.key] if offsets else 0
        sym = "&" if node.pos == "s" else "@"
        ptrs.append((sym, toff, POS_OF_KEY[target.key]))
    for child in node.children:
        target = nodes[child]
        toff = offsets[target.key] if offsets else 0
        sym = "&" if target.pos == "s" else "~"
        ptrs.append((sym, toff, POS_OF_KEY[target.key]))
    for link in node.links:
        target = nodes[link]
        toff = offsets[target.key] if offsets else 0
        ptrs.append(("+", toff, POS_OF_KEY[target.key]))
    fields.append(f"{len(ptrs):03d}")
    for sym, toff, pos in ptrs:
        fields.extend([sym, f"{toff:08d}", pos, "0000"])
    if node.pos == "v":
        fields.extend(["01", "+", "02", "00"])  # frame section
    return " ".join(fields) + " | " + node.gloss


def compute_offsets(pos):
    # Pass with zero offsets fixes the line lengths (all offset fields are
    # 8 chars), so real offsets can be substituted in place later.
    offsets = {}
    cursor = len(HEADER.encode())
    for node in by_file[pos]:
        line = compose_data_line(node, None)
        offsets[node.key] = cursor
        cursor += len(line.encode()) + 1
    return offsets


def build_data_file(pos, all_offsets):
    body = [compose_data_line(node, all_offsets) for node in by_file[pos]]
    return HEADER + "\n".join(body) + "\n"


def build_index_file(pos, offsets):
    rows = []
    for (p, lemma), keys in sorted(sense_order.items()):
        if p not in ("n", "v", "a", "r", "s"):
            raise SystemExit("bad pos " + p)
        file_pos = "a" if p == "s" else p
        if file_pos != pos:
            continue
        symbols = []
        for key in keys:
            node = nodes[key]
            if node.parents:
                symbols.append("&" if node.pos == "s" else "@")
            if node.children:
                symbols.append("~")
            if node.links:
                symbols.append("+")
        symbols = sorted(set(symbols))
        n = len(keys)
        row = [lemma, pos, str(n), str(len(symbols))]
        row.extend(symbols)
        row.extend([str(n), "1" if n else "0"])
        row.extend(f"{offsets[key]:08d}" for key in keys)
        rows.append(" ".join(row))
    return HEADER + "\n".join(rows) + "\n"


def build_exc_file(pairs):
    rows = [" ".join([form] + bases) for form, bases in sorted(pairs)]
    return HEADER + "\n".join(rows) + "\n"


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    os.makedirs(ORACLE_DIR, exist_ok=True)

    all_offsets = {}
    for pos in POS_FILES:
        all_offsets.update(compute_offsets(pos))
    for pos, suffix in POS_FILES.items():
        with open(os.path.join(OUT_DIR, "data." + suffix), "w") as f:
            f.write(build_data_file(pos, all_offsets))
    for pos, suffix in POS_FILES.items():
        with open(os.path.join(OUT_DIR, "index." + suffix), "w") as f:
            f.write(build_index_file(pos, all_offsets))
    for suffix, pairs in (("noun", NOUN_EXC), ("verb", VERB_EXC),
                          ("adj", ADJ_EXC)):
        with open(os.path.join(OUT_DIR, suffix + ".exc"), "w") as f:
            f.write(build_exc_file(pairs))

    # Oracle tables, computed with an independent upward traversal.
    depth = {}

    def depth_of(key, trail=()):
        if key in depth:
            return depth[key]
        if key in trail:
            raise SystemExit("cycle at " + key)
        node = nodes[key]
        if not node.parents:
            d = 1
        else:
            d = 1 + min(depth_of(p, trail + (key,)) for p in node.parents)
        depth[key] = d
        return d

    noun_nodes = [n for n in nodes.values() if n.pos == "n"]
    with open(os.path.join(ORACLE_DIR, "wordnet_depths.tsv"), "w") as f:
        for node in sorted(noun_nodes, key=lambda n: all_offsets[n.key]):
            f.write(f"{all_offsets[node.key]:08d}\t{depth_of(node.key)}\t"
                    f"{node.lemmas[0]}\n")

    def ancestors(key):
        out = {key}
        for p in nodes[key].parents:
            out |= ancestors(p)
        return out

    with open(os.path.join(ORACLE_DIR, "wordnet_rollup4.tsv"), "w") as f:
        for node in sorted(noun_nodes, key=lambda n: all_offsets[n.key]):
            up = [k for k in ancestors(node.key) if depth_of(k) == 4]
            names = sorted(nodes[k].lemmas[0] for k in up)
            f.write(f"{all_offsets[node.key]:08d}\t{','.join(names)}\n")

    counts = collections.Counter(POS_OF_KEY[n.key] for n in nodes.values())
    print(f"synsets: {dict(counts)} total={len(nodes)}")
    print(f"noun lemmas: {sum(1 for (p, _) in sense_order if p == 'n')}")
    d4 = sorted(n.lemmas[0] for n in noun_nodes if depth_of(n.key) == 4)
    print(f"depth-4 concepts ({len(d4)}): {', '.join(d4)}")


if __name__ == "__main__":
    sys.exit(main())
