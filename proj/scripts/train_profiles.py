#!/usr/bin/env python3
"""Build the bundled language-identification assets.

Writes one sample corpus per language under data/lang_samples/ and a ranked
n-gram profile trained from it under data/profiles/.  Training mirrors the
toolkit's own profile builder byte for byte: tokens are maximal runs of
ASCII letters or bytes >= 0x80, ASCII-lowercased, padded with underscores,
counted as character n-grams for n = 1..5, and the top 400 by
(count desc, gram asc) form the profile.

Ends with a self-check: a held-out English paragraph must rank english
first, and an informal Spanish tweet must push english out of the top 10.
"""

import os
import sys
from collections import Counter

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SAMPLES_DIR = os.path.join(ROOT, "data", "lang_samples")
PROFILES_DIR = os.path.join(ROOT, "data", "profiles")
PROFILE_SIZE = 400

SAMPLES = {
    "english": """
The weather this morning was cold and clear, and the streets were still
quiet when she left the house. She walked to the station with a book under
her arm, thinking about the long list of things that had to be done before
the weekend. The train arrived a few minutes late, which gave her time to
buy a cup of coffee and a newspaper from the small shop on the platform.
People around her were talking quietly about the news, about their
children, about the price of bread and the state of the roads. When the
doors opened she found a seat by the window and watched the fields slide
past, grey and brown under the winter sky. There is something calming
about travelling through familiar country, she thought, even when the day
ahead promises nothing but meetings and paperwork. By the time the city
appeared on the horizon the carriage had filled with students and office
workers, and the quiet of the early morning had given way to the ordinary
noise of a working day. She closed her book, finished the last of her
coffee, and joined the crowd moving slowly towards the exits.
""",
    "spanish": """
El mercado de la ciudad abre temprano, cuando las calles todavía están
vacías y el aire huele a pan recién hecho. Los vendedores colocan la fruta
en cajas de madera: naranjas, manzanas, uvas y melones que brillan bajo la
primera luz de la mañana. Una mujer mayor pregunta por el precio de los
tomates y el vendedor le contesta con una sonrisa, porque se conocen desde
hace muchos años. Más tarde llegan los turistas con sus cámaras y sus
mapas, buscando algo típico que llevarse a casa. En la plaza central hay
una fuente antigua donde los niños juegan mientras sus padres toman café
en las terrazas. Cuando llega la hora de comer, los restaurantes se llenan
de gente que pide pescado fresco, arroz y ensaladas. Por la tarde el calor
aprieta y muchas tiendas cierran durante unas horas, siguiendo la
costumbre de siempre. Al caer el sol la ciudad despierta otra vez, y las
familias salen a pasear junto al río hasta bien entrada la noche.
""",
    "french": """
La bibliothèque du quartier ouvre ses portes à neuf heures, mais les
habitués arrivent souvent plus tôt et attendent devant l'entrée en
discutant du temps qu'il fait. À l'intérieur, les grandes fenêtres
laissent entrer une lumière douce qui tombe sur les tables de bois et les
rayons chargés de livres. Les étudiants s'installent près des prises
électriques, tandis que les retraités préfèrent les fauteuils du fond, là
où l'on entend à peine le bruit de la rue. Une bibliothécaire pousse un
chariot entre les étagères et replace les romans rendus la veille. Vers
midi, certains sortent manger un sandwich dans le petit parc voisin, puis
reviennent pour l'après-midi. On trouve ici des journaux du monde entier,
des dictionnaires anciens et des cartes jaunies par les années. Le soir,
avant la fermeture, une voix annonce doucement qu'il est temps de ranger
ses affaires, et chacun rentre chez soi avec un livre ou deux sous le
bras.
""",
    "german": """
Der Bahnhof der kleinen Stadt wurde vor über hundert Jahren gebaut und
steht heute unter Denkmalschutz. Jeden Morgen fahren die Pendler von hier
in die nahe Großstadt, wo sie in Büros, Schulen und Krankenhäusern
arbeiten. Im Sommer hängen Blumenkästen an den Fenstern des alten
Empfangsgebäudes, und der Duft von frischem Brot zieht aus der Bäckerei
gegenüber herüber. Die Züge sind meistens pünktlich, aber wenn es schneit,
kommt es manchmal zu Verspätungen, und die Wartenden drängen sich in der
kleinen Halle zusammen. Ein älterer Herr verkauft seit Jahrzehnten
Zeitungen am Kiosk und kennt viele Fahrgäste mit Namen. Am Wochenende
kommen Wanderer mit großen Rucksäcken, die in den Bergen unterwegs sind
und abends müde, aber zufrieden zurückkehren. Im Herbst, wenn das Laub die
Gleise bedeckt, wird es früh dunkel, und die Lampen auf dem Bahnsteig
leuchten durch den Nebel.
""",
    "italian": """
La domenica mattina il paese si sveglia lentamente, con il suono delle
campane che attraversa le vie strette del centro. Le donne anziane escono
presto per comprare il pane e si fermano a parlare davanti alla chiesa,
mentre i bambini giocano a pallone nella piazza. Il bar vicino al
municipio prepara il caffè per i primi clienti, che leggono il giornale
seduti ai tavolini di ferro. Verso mezzogiorno le cucine si riempiono di
profumi: il sugo di pomodoro, la pasta fatta in casa, l'arrosto che cuoce
piano nel forno. Dopo pranzo gli uomini si ritrovano al circolo per
giocare a carte, e le discussioni sul calcio durano fino a sera. D'estate
le famiglie scendono al mare nei giorni di festa, e la spiaggia si copre
di ombrelloni colorati. Quando arriva l'autunno si raccolgono le olive e
l'uva, e nelle cantine si prepara il vino nuovo che accompagnerà le lunghe
serate d'inverno.
""",
    "portuguese": """
No fim da tarde, quando o calor diminui, os moradores do bairro descem até
à praça para conversar e ver o movimento. Os pescadores voltam do mar com
as caixas cheias de peixe, e as gaivotas acompanham os barcos até ao
porto. Na padaria da esquina o cheiro do pão quente atravessa a rua, e há
sempre uma fila de gente que sai do trabalho com fome. As crianças andam
de bicicleta entre as árvores enquanto os avós observam dos bancos de
pedra. No café, os homens discutem futebol e política com a mesma paixão
de sempre, e o empregado já sabe o que cada um vai pedir. Quando chega o
verão, as festas enchem as ruas de música e de luzes, e dança-se até de
madrugada. Depois vêm os dias calmos de setembro, com as vindimas no campo
e as primeiras chuvas, que lavam o pó dos telhados e deixam o ar limpo e
fresco.
""",
    "dutch": """
Op zaterdagochtend is de markt het hart van de stad, en de kramen staan al
vroeg opgebouwd langs de gracht. De koopman prijst zijn kaas aan met luide
stem, terwijl de visboer haring schoonmaakt voor een rij wachtende
klanten. Studenten fietsen voorbij met tassen vol boeken, op weg naar de
bibliotheek of naar hun bijbaan in het centrum. Bij de bloemenkraam kiezen
mensen tulpen in alle kleuren, want bloemen op tafel horen bij het
weekend. Een oude man voert de eenden bij de brug, zoals hij elke week
doet, en kinderen kijken toe met grote ogen. Als het begint te regenen
schuilen de bezoekers onder de zeilen van de kramen, en de verkopers
schenken koffie voor de vaste klanten. Tegen de middag worden de prijzen
lager, en wie slim is wacht tot het laatste uur om groente en fruit
goedkoop mee naar huis te nemen.
""",
    "swedish": """
Om sommaren åker många familjer ut till stugan vid sjön, där dagarna är
långa och ljusa. Barnen badar från bryggan medan de vuxna sitter på
verandan med kaffe och kanelbullar. På midsommarafton reser man majstången
på ängen, och alla dansar och sjunger till långt in på natten. Skogen runt
stugan är full av blåbär och svamp, och på hösten fylls korgarna snabbt.
När vintern kommer fryser sjön till is, och grannarna skottar en bana för
skridskor. Inne i huset brinner elden i kaminen, och det luktar nybakat
bröd och glögg. Många svenskar säger att de trivs bäst på landet, långt
från stadens buller, där man kan höra fåglarna om morgonen och se
stjärnorna om kvällen. Efter helgen tar man tåget tillbaka till arbetet,
men tankarna stannar kvar vid vattnet och tallarna.
""",
    "danish": """
Hver morgen cykler tusindvis af mennesker gennem byen på vej til arbejde
og skole. Cykelstierne er brede, og selv om vinteren, når det regner og
blæser, holder de fleste fast i deres to hjul. Ved havnen er de gamle
pakhuse blevet til caféer og kontorer, og om sommeren bader børn og voksne
fra badebroerne i det klare vand. Danskerne taler meget om hygge, og det
betyder levende lys, varm kakao og gode venner omkring et bord. Om
efteråret blæser vinden fra vest, og bøgeskoven skifter farve fra grøn til
gylden. I december hænger der julelys i alle gader, og der dufter af
brændte mandler og gløgg på torvet. Når foråret endelig kommer, rykker
hele byen udenfor, og parkerne fyldes med mennesker, der spiller bold,
griller og nyder solen efter den lange mørke vinter.
""",
    "norwegian": """
Langs kysten ligger små fiskevær hvor husene er malt i sterke farger,
røde, gule og hvite mot det grå havet. Fiskerne drar ut tidlig om
morgenen, lenge før sola står opp bak fjellene. Om vinteren kommer skreien
inn til kysten, og da er det travle uker på bryggene. Inne i fjordene er
vannet stille og dypt, og fjellene speiler seg blankt på rolige dager.
Mange nordmenn går på tur i helgene, sommer som vinter, med sekk på ryggen
og matpakke i lomma. På fjellet ligger snøen lenge, og påsken tilbringes
gjerne på ski med appelsin og sjokolade i solveggen. Når våren endelig
kommer, smelter snøen i elvene, og lyset vender tilbake til dalene. Da
sitter folk ute om kveldene og nyter de lange, lyse kveldene, og ingen vil
legge seg tidlig.
""",
    "finnish": """
Kesällä suomalaiset matkustavat mökille järven rantaan, jossa sauna
lämpiää joka ilta. Järvessä uidaan heti löylyjen jälkeen, vaikka vesi
olisi viileää. Illalla grillataan makkaraa ja istutaan laiturilla
katsomassa auringonlaskua, joka kestää pohjoisessa lähes koko yön.
Metsässä poimitaan mustikoita ja sieniä, ja pakastin täyttyy talven
varalle. Syksyllä luonto hiljenee, linnut lentävät etelään ja ensimmäinen
lumi sataa usein jo lokakuussa. Talvella järvi jäätyy, ja jäälle aurataan
latuja hiihtäjille ja ratoja luistelijoille. Pimeys on pitkä, mutta
kynttilät ja takkatuli tekevät kodista lämpimän. Keväällä valo palaa
nopeasti, hanget sulavat ja muuttolinnut täyttävät taivaan. Silloin
jokainen tietää, että kesä ja mökkikausi ovat taas edessä.
""",
    "polish": """
W niedzielne popołudnie park w centrum miasta zapełnia się spacerowiczami.
Rodziny z dziećmi karmią kaczki nad stawem, a starsi panowie grają w
szachy przy kamiennych stolikach. Wiosną kwitną tu kasztany i bzy, a ich
zapach czuć w całej okolicy. Studenci siadają z książkami na trawie, choć
częściej patrzą w telefony niż w notatki. Przy głównej alei sprzedawca
lodów ma najwięcej pracy, bo kolejka nie kończy się aż do wieczora.
Jesienią liście spadają na ścieżki i szeleszczą pod butami, a fotografowie
szukają najlepszego światła między drzewami. Zimą staw zamarza i dzieci
jeżdżą na łyżwach, podczas gdy rodzice piją gorącą herbatę z termosów.
Każda pora roku ma tutaj swój kolor i swój dźwięk, dlatego mieszkańcy
wracają do parku przez cały rok.
""",
    "czech": """
Praha je známá svými mosty a věžemi, ale i obyčejné čtvrti mají své
kouzlo. Ráno jezdí tramvaje plné lidí do práce a u pekařství voní čerstvé
rohlíky. V poledne se úředníci a studenti scházejí v hospodách na polévku
a knedlíky, a k tomu si dají pivo, které je tu levnější než voda.
Odpoledne sedí důchodci v parku na lavičkách a krmí holuby, zatímco děti
se vracejí ze školy s aktovkami na zádech. Večer se rozsvítí lampy podél
řeky a na nábřeží hrají pouliční muzikanti. O víkendu vyrážejí rodiny na
chaty za město, kde pracují na zahradě a grilují špekáčky. V zimě napadne
sníh a střechy starého města vypadají jako z pohádky. Turisté fotografují
orloj, ale místní spěchají kolem, protože ho vidí každý den.
""",
    "slovak": """
Vysoké Tatry sú najmenšie veľhory na svete, ale pre Slovákov znamenajú
veľmi veľa. V lete sem prichádzajú turisti z celej krajiny, aby vystúpili
na štíty a prespali na horských chatách. Chodníky vedú okolo plies,
ktorých hladina je čistá a studená ako ľad. Na chatách sa podáva
kapustnica a čaj s rumom, a nosiči vynášajú zásoby na chrbte stovky metrov
prevýšenia. V zime sa doliny menia na lyžiarske strediská a deti sa učia
lyžovať skôr, ako vedia poriadne čítať. Na jar treba dávať pozor na
lavíny, preto sú niektoré trasy zatvorené. Jeseň je najkrajšia, keď sa
kosodrevina sfarbí a nad dolinami krúžia orly. Večer pri ohni sa
rozprávajú staré príbehy o zbojníkoch a medveďoch, ktoré v týchto horách
stále žijú.
""",
    "hungarian": """
Budapesten a Duna két partját hidak kötik össze, és este a város fényei
visszatükröződnek a vízen. A fürdők már reggel megtelnek emberekkel, akik
a meleg vízben beszélgetnek vagy sakkoznak. A piacon friss zöldséget,
kolbászt és paprikát árulnak, az árusok hangosan kínálják a portékájukat.
Délben a kifőzdékben gulyásleves és túrós csusza kerül az asztalra, a
vendégek pedig elégedetten törlik meg a szájukat. A villamos
végigcsörömpöl a körúton, miközben a kávéházakban írók és diákok ülnek a
laptopjuk előtt. Hétvégén a családok kirándulni mennek a budai hegyekbe,
ahonnan szép kilátás nyílik az egész városra. Ősszel a gesztenyesütők
megjelennek az utcasarkokon, és az illat bejárja a teret. Télen a
korcsolyapálya a városliget közepén minden este tele van fiatalokkal.
""",
    "romanian": """
În fiecare dimineață, bătrânii din sat se adună la poartă și vorbesc
despre vreme și despre recoltă. Drumul spre câmp trece pe lângă biserica
veche, unde clopotele bat duminica și de sărbători. Femeile coc pâine în
cuptoare de lut și pun murături pentru iarnă în borcane mari de sticlă.
Copiii merg la școală prin livada de pruni, iar toamna se opresc să
culeagă nuci de pe jos. La târgul din oraș, țăranii vând brânză, ouă și
miere, și cumpără unelte pentru gospodărie. Seara, satul miroase a fum de
lemn și a mâncare gătită, iar câinii latră la căruțele care trec. Vara,
când vine seceta, oamenii se uită la cer și așteaptă ploaia ca pe o
binecuvântare. Iarna, zăpada acoperă acoperișurile și drumurile, și totul
devine alb și liniștit până în primăvară.
""",
    "turkish": """
İstanbul'da sabah erken saatlerde vapur sesleri duyulur ve martılar
denizin üzerinde uçar. Simitçiler tezgâhlarını hazırlar, çaycılar ilk
demliği ocağa koyar. İnsanlar işe giderken ellerinde çay bardağı ve
gazeteyle iskelede bekler. Balıkçılar oltalarını köprüden sallandırır ve
turistler fotoğraf çeker. Öğle vakti lokantalar dolup taşar, mercimek
çorbası ve pide kokusu sokağa yayılır. Çarşıda pazarlık sesleri yükselir,
baharat ve kahve kokusu birbirine karışır. Akşam olunca aileler parklarda
çay içer, gençler sahilde gitar çalar. Yaz geceleri sıcak ve uzundur,
kışın ise lodos eser ve vapur seferleri bazen iptal edilir. Bu şehir iki
kıtayı birleştirir ve her sokağında başka bir hikâye saklar.
""",
    "indonesian": """
Setiap pagi pasar tradisional di kampung kami sudah ramai sebelum matahari
terbit. Para pedagang menata sayuran, ikan segar, dan buah-buahan di atas
meja kayu. Ibu-ibu menawar harga cabai dan bawang sambil bercerita tentang
keluarga mereka. Di warung kopi, para bapak duduk membaca koran dan
membicarakan hasil panen padi. Anak-anak berangkat ke sekolah dengan
sepeda, melewati sawah yang hijau dan kerbau yang sedang membajak. Siang
hari udara menjadi panas, dan orang-orang berteduh di bawah pohon beringin
besar di tengah desa. Sore hari hujan sering turun deras, membuat jalan
tanah menjadi licin. Malam hari keluarga berkumpul untuk makan bersama,
dengan nasi, tempe, sambal, dan sayur asem. Kehidupan di desa berjalan
sederhana tetapi penuh kebersamaan dan gotong royong.
""",
    "catalan": """
Els diumenges al matí, la gent del poble es troba a la plaça per comprar
pa i dolços a la fleca. Els avis seuen als bancs sota els plàtans i parlen
de quan eren joves i treballaven al camp. A l'estiu, la festa major omple
els carrers de música, castellers i focs artificials. Les colles assagen
durant setmanes per aixecar torres humanes cada cop més altes, i quan
l'enxaneta fa l'aleta, tothom aplaudeix. A la tardor es cullen els bolets
als boscos de la muntanya, i cal saber distingir els bons dels dolents.
Per Nadal es fa cagar el tió i es menja escudella amb carn d'olla, seguida
dels torrons i les neules. Al gener arriben els Reis amb regals per als
nens que han estat bons. Cada poble té les seves tradicions, i la llengua
les manté vives de generació en generació.
""",
    "galician": """
Polas mañás de inverno o mar está bravo e os mariñeiros quedan na casa
arranxando as redes. As mulleres van á praza mercar peixe fresco, polbo e
pan de millo quente. Nas aldeas do interior as vacas saen cedo para o
monte e as campás da igrexa tocan ás oito. Cando chove, que é case sempre,
a auga corre polas corredoiras entre os muros de pedra. No verán as festas
enchen as vilas de música e os veciños comparten viño do país e empanada.
Os vellos sentan ao sol a falar da colleita e dos fillos que traballan
lonxe. Polo outono vaise ao souto coller castañas e cóllense os
derradeiros tomates da horta. A néboa sobe do río pola noite e cobre os
tellados ata o amencer. Quen marcha sempre volve, din aquí, porque esta
terra tira moito.
""",
    "occitan": """
Dins los vilatges de las montanhas, la vida seguís lo ritme de las sasons.
Lo matin, los pastres menan las fedas cap als prats nauts ont l'èrba es
fresca. Las femnas van al mercat crompar de pan, de formatge e de fruta
del país. A miègjorn, las familhas se recampan a l'entorn de la taula per
manjar la sopa e lo civet. Los vièlhs parlan la lenga nòstra e la vòlon
transmetre als joves de l'escòla. L'estiu, las fèstas emplisson las
carrièras de musica e de danças tradicionalas. Se canta de cançons
ancianas jos las estelas fins a mièjanuit. L'autom, se van culhir los
bolets dins los bòsques de castanhièrs. L'ivèrn, la nèu cobrís los teulats
e lo fuòc brutla dins las chemineias. Aquesta tèrra es paura mas bèla, e
sos enfants l'aiman coma una maire.
""",
    "croatian": """
Ljeti obala oživi, a mali gradovi uz more pune se gostiju iz cijele
Europe. Ribari ujutro donose svježu ribu na tržnicu, gdje domaćice biraju
najbolje komade za ručak. Stare kamene kuće imaju zelene kapke koji se
zatvaraju protiv podnevne vrućine. Na rivi se navečer šeće, jede sladoled
i sluša klapska pjesma s trga. Djeca skaču u more s mula, a stariji igraju
boćanje u hladu borova. U konobama se poslužuje pršut, sir i crno vino iz
obiteljskih vinograda. Kad zapuše bura, more se zapjeni i brodovi ostaju u
luci, a mještani kažu da bura čisti zrak. Zimi su ulice tihe i gradovi
vraćeni svojim stanovnicima, koji polako popravljaju kuće i čekaju novo
proljeće i nove goste.
""",
    "slovenian": """
Slovenija je majhna dežela, a se v njej srečajo Alpe, morje in kras. Ob
sobotah se veliko družin odpravi v hribe, kjer na vrhovih žigosajo
planinske dnevnike in jedo sendviče z razgledom na doline. Na Bledu
veslajo pletne proti otoku sredi jezera, poročni pari pa nosijo neveste po
devetindevetdesetih stopnicah do cerkve. Jeseni gredo gobarji zgodaj
zjutraj v gozd in se vračajo s polnimi košarami jurčkov. Na kmetijah
stiskajo jabolčni sok in kuhajo žganje, v kleteh pa zori mlado vino.
Pozimi zasnežena pokrajina privablja smučarje na Kranjsko Goro in Pohorje.
Ob večerih diši po potici in kuhanem vinu, družine pa se grejejo ob
krušnih pečeh. Spomladi se travniki obarvajo z narcisami in čebelarji
odprejo panje na gorskih pašnikih.
""",
    "estonian": """
Suvel sõidavad paljud pered maale vanaema tallu, kus päevad mööduvad aias
ja metsas. Lapsed korjavad maasikaid ja ujuvad järves, vanemad niidavad
heina ja parandavad aeda. Saunaõhtu on nädala tähtsaim sündmus: leil,
vihtlemine ja pärast jahutav hüpe vette. Metsast tuuakse mustikaid, pohli
ja seeni, mis pannakse talveks purki. Sügisel muutuvad kased kollaseks ja
õhtud pimedaks, siis süüdatakse küünlad ja keedetakse moosi. Talvel katab
lumi põllud ja lapsed lasevad kelguga mäest alla. Jõulude ajal tuuakse
tuppa kuusk ja lauale verivorst hapukapsaga. Kevadel naasevad kuldnokad
pesakastidesse ja jääminek täidab jõed veega. Siis algab maal uus aasta,
täis tööd ja valgust.
""",
    "latvian": """
Jāņu naktī visā Latvijā deg ugunskuri un skan dziesmas. Sievietes pin
vainagus no ozola lapām un pļavas ziediem, vīri sien sieru ar ķimenēm un
lej alu kausos. Līdz rīta gaismai tiek dziedātas līgo dziesmas un lēkts
pāri ugunskuram, lai gads būtu veiksmīgs. Vasarā ģimenes brauc uz jūrmalu,
kur baltās smiltis stiepjas gar priežu mežiem. Rudenī mežos lasa sēnes un
dzērvenes purvos, bet dārzos novāc ābolus. Ziemā pilsētās atveras tirdziņi
ar piparkūkām un karstvīnu, un bērni gaida sniegu. Pavasarī atgriežas
stārķi un ievas zied baltiem ziediem gar upēm. Katrs gadalaiks nes savus
darbus un svētkus, un tradīcijas tiek nodotas no paaudzes paaudzē.
""",
    "lithuanian": """
Vilniaus senamiestis yra vienas didžiausių Rytų Europoje, su siauromis
gatvelėmis ir barokinėmis bažnyčiomis. Rytais kepyklose kvepia šviežia
duona, o turguje moterys parduoda medų, sūrį ir uogas. Vasarą miestiečiai
važiuoja prie ežerų, kurių Lietuvoje yra tūkstančiai, maudosi ir žvejoja
iki sutemų. Kaimuose seneliai pasakoja anūkams senas sakmes apie miško
dvasias ir užburtus lobius. Rudenį bulviakasis sutraukia visą šeimą į
laukus, o vakare ant stalo garuoja cepelinai su spirgučiais. Žiemą
užšalusiuose ežeruose žvejai gręžia eketes ir kantriai laukia kimbant
žuvims. Pavasarį gandrai grįžta į savo lizdus ant elektros stulpų, ir tai
laikoma geros vasaros ženklu. Per Jonines pinami vainikai ir ieškoma
paparčio žiedo.
""",
    "icelandic": """
Á Íslandi skiptast á eldur og ís, og veðrið getur breyst á nokkrum
mínútum. Ferðamenn koma til að sjá jökla, eldfjöll og fossa sem falla fram
af svörtum klettum. Á veturna dansa norðurljósin á himninum og heimamenn
fara í sund í heitum laugum þótt frost sé úti. Sauðfé gengur frjálst um
fjöll á sumrin, og á haustin ríða bændur til fjalla í réttir til að smala
fénu heim. Í Reykjavík er mannlíf fjölbreytt, kaffihús full af fólki og
tónleikar á hverju kvöldi. Sjómenn róa til fiskjar eins og forfeður þeirra
hafa gert í þúsund ár, og þorskurinn er enn mikilvægur fyrir efnahaginn. Á
sumrin er bjart allan sólarhringinn og börn leika sér úti langt fram á
nótt. Sögurnar um álfa og huldufólk lifa enn í þjóðtrúnni.
""",
    "irish": """
Tá an Ghaeilge á labhairt in Éirinn leis na mílte bliain, agus tá sí fós
beo sna ceantair Ghaeltachta. Téann na páistí ar scoil gach maidin agus
foghlaimíonn siad amhráin agus scéalta ó na seandaoine. Cois farraige,
bíonn na hiascairí ag obair go dian, ag tarraingt na líonta isteach sula
n-éiríonn an ghaoth. Sa samhradh, tagann cuairteoirí ó gach cearn den
domhan chun an ceol traidisiúnta a chloisteáil sna tithe tábhairne. Bíonn
an fhidil, an bosca ceoil agus an bodhrán le cloisteáil go minic san
oíche. Fásann an féar go glas ar fud na tíre mar go mbíonn báisteach ann
go rialta. Téann muintir na háite ag siúl ar na sléibhte agus feiceann
siad caoirigh ar gach taobh. Tá grá mór ag na daoine don áit seo, dá
teanga agus dá gcultúr féin.
""",
    "welsh": """
Mae'r Eisteddfod yn un o wyliau pwysicaf Cymru, lle mae pobl yn cystadlu
mewn canu, barddoniaeth a dawnsio. Bob haf, mae teuluoedd yn teithio o bob
rhan o'r wlad i'r maes, yn gwersylla ac yn cwrdd â hen ffrindiau. Mae'r
côr yn ymarfer am fisoedd cyn y gystadleuaeth fawr, a'r beirdd yn paratoi
eu cerddi ar gyfer y gadair a'r goron. Yn y gogledd, mae'r mynyddoedd yn
uchel a'r llwybrau yn arwain trwy'r bylchau at y copaon. Mae defaid yn
pori ar y llethrau ac mae'r ffermwyr yn eu casglu gyda chŵn defaid clyfar.
Ar hyd yr arfordir, mae'r traethau yn hir ac yn dywodlyd, a'r castell ar y
bryn yn gwylio dros y dref. Mae'r iaith Gymraeg i'w chlywed yn y siopau,
yn yr ysgolion ac ar y strydoedd, ac mae'r plant yn ei dysgu gyda
balchder.
""",
    "swahili": """
Kila asubuhi wakulima huenda shambani mapema kabla jua halijachomoza.
Wanawake hubeba vikapu vya mboga na matunda kwenda sokoni, ambako biashara
huanza mara moja. Watoto huvaa sare zao na kutembea kwenda shuleni,
wakicheza na kucheka njiani. Mchana jua huwa kali, na watu hupumzika
kivulini mwa miembe mikubwa. Wavuvi hurudi kutoka ziwani na samaki wengi,
na wanunuzi huja haraka kuchagua walio wazuri. Jioni familia hukusanyika
kula ugali na mboga, na wazee husimulia hadithi za zamani. Watoto
husikiliza kwa makini hadithi za sungura mjanja na simba mkali. Usiku wa
mbalamwezi vijana hucheza ngoma na kuimba nyimbo za jadi. Maisha ya
kijijini yana amani, ingawa kazi ni nyingi kila siku.
""",
    "basque": """
Euskal Herrian mendiak eta itsasoa oso gertu daude, eta jendeak biak maite
ditu. Igandeetan familia asko mendira joaten dira, eta tontorrean
ogitartekoa jan eta gero, sagardoa edaten dute. Arrantzaleek goizean goiz
ateratzen dituzte ontziak portutik, eta arratsaldean itsasora begira
egoten dira emakumeak. Herriko plazan pilota partidak jokatzen dira
larunbatero, eta ikusleek gogotsu animatzen dituzte pilotariak. Jaietan
txistulariak eta dantzariak kalera ateratzen dira, eta gauean bertsolariek
kantatzen dute plazan. Baserrietan gazta egiten da ardi esnearekin, eta
azokan saltzen dute asteazkenero. Udazkenean gaztainak erretzen dira eta
sagarrak biltzen dira sagardotegietarako. Euskarak belaunaldiz belaunaldi
iraun du, eta gaur egun eskoletan irakasten da.
""",
}

CHECK_ENGLISH = (
    "The committee will meet on Thursday to review the annual budget and "
    "discuss plans for the new library building, which residents have "
    "requested for years and which the council finally approved last month."
)
CHECK_SPANISH = (
    "menuda tormenta está cayendo ahora mismo, llueve a cántaros y también "
    "graniza, jamás vi lluvia igual, id con cuidado si salís a la calle, "
    "árboles caídos y señales rotas por cada esquina, según anuncian "
    "seguirán los relámpagos durante la madrugada"
)


def is_word_byte(b):
    return 65 <= b <= 90 or 97 <= b <= 122 or b >= 0x80


def lower(b):
    return b + 32 if 65 <= b <= 90 else b


def count_ngrams(data):
    counts = Counter()
    token = bytearray()

    def flush():
        if not token:
            return
        padded = b"_" + bytes(token) + b"_"
        for n in range(1, 6):
            if len(padded) < n:
                break
            for i in range(len(padded) - n + 1):
                gram = padded[i : i + n]
                if gram.strip(b"_") == b"":
                    continue
                counts[gram] += 1
        token.clear()

    for b in data:
        if is_word_byte(b):
            token.append(lower(b))
        else:
            flush()
    flush()
    return counts


def top_grams(data, limit=PROFILE_SIZE):
    order = sorted(count_ngrams(data).items(), key=lambda kv: (-kv[1], kv[0]))
    return [g for g, _ in order[:limit]]


def out_of_place(doc, lang):
    rank = {g: i for i, g in enumerate(lang)}
    penalty = len(lang)
    return sum(
        abs(i - rank[g]) if g in rank else penalty for i, g in enumerate(doc)
    )


def ranking(text, profiles):
    doc = top_grams(text.encode("utf-8"))
    scored = sorted(
        (out_of_place(doc, grams), name) for name, grams in profiles.items()
    )
    return [name for _, name in scored]


def main():
    os.makedirs(SAMPLES_DIR, exist_ok=True)
    os.makedirs(PROFILES_DIR, exist_ok=True)
    profiles = {}
    for lang in sorted(SAMPLES):
        text = " ".join(SAMPLES[lang].split()) + "\n"
        data = text.encode("utf-8")
        with open(os.path.join(SAMPLES_DIR, lang + ".txt"), "wb") as f:
            f.write(data)
        grams = top_grams(data)
        if len(grams) < PROFILE_SIZE:
            raise SystemExit(f"{lang}: only {len(grams)} grams, corpus too small")
        with open(os.path.join(PROFILES_DIR, lang + ".profile"), "wb") as f:
            f.write(b"\n".join(grams) + b"\n")
        profiles[lang] = grams
        print(f"{lang}: {len(data)} bytes")

    en = ranking(CHECK_ENGLISH, profiles)
    es = ranking(CHECK_SPANISH, profiles)
    print("english paragraph ranking:", en[:5])
    print("spanish tweet ranking:", es[:12])
    print("english rank for spanish tweet:", es.index("english") + 1)
    ok = en[0] == "english" and es.index("english") + 1 > 10
    if not ok:
        raise SystemExit("self-check failed")
    print("self-check ok")


if __name__ == "__main__":
    main()
