#!/usr/bin/env python3
"""Regenerate the bundled lexicon files under src/stylebreach/lexicons/.

The package ships static lexicons so that feature extraction needs no
downloads at runtime. This script is the single source of truth for them:

  common_words.txt      curated English words, most-frequent-first
  word_frequencies.tsv  word<TAB>count, Zipf counts assigned over the ranking
  stop_words.txt        scikit-learn's English stop-word list
  function_words.txt    hand-compiled closed-class function words
  easy_words.txt        top slice of the ranking (readability easy list)
  contractions.tsv      29 contracted<TAB>expanded pairs

Run from the repository root:  python3 tools/build_lexicons.py
"""

from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "stylebreach" / "lexicons"

# Approximate frequency ordering; the head of the list follows the usual
# most-common-words rankings, the tail is grouped by category (ordering
# there barely moves log2 frequency classes).
RANKED_CORE = """
the of and a to in is you that it he was for on are as with his they i
at be this have from or one had by word but not what all were we when
your can said there use an each which she do how their if will up
other about out many then them these so some her would make like him
into time has look two more write go see number no way could people my
than first water been call who its now find long down day did get come
made may part over new sound take only little work know place year
live me back give most very after thing our just name good sentence
man think say great where help through much before line right too
mean old any same tell boy follow came want show also around form
three small set put end does another well large must big even such
because turn here why ask went men read need land different home us
move try kind hand picture again change off play spell air away animal
house point page letter mother answer found study still learn should
world high every near add food between own below country plant last
school father keep tree never start city earth eye light thought head
under story saw left dont few while along might close something seem
next hard open example begin life always those both paper together got
group often run important until children side feet car mile night walk
white sea began grow took river four carry state once book hear stop
without second later miss idea enough eat face watch far really almost
let above girl sometimes mountain cut young talk soon list song being
leave family body music color stand sun questions fish area mark dog
horse birds problem complete room knew since ever piece told usually
didnt friends easy heard order red door sure become top ship across
today during short better best however low hours black products
happened whole measure remember early waves reached listen wind rock
space covered fast several hold himself toward five step morning
passed vowel true hundred against pattern numeral table north slowly
money map farm pulled draw voice seen cold cried plan notice south
sing war ground fall king town unit figure certain field travel wood
fire upon done english road half ten fly gave box finally wait correct
oh quickly person became shown minutes strong verb stars front feel
fact inches street decided contain course surface produce building
ocean class note nothing rest carefully scientists inside wheels stay
green known island week less machine base ago stood plane system
behind ran round boat game force brought understand warm common bring
explain dry though language shape deep thousands yes clear equation
yet government filled heat full hot check object am rule among noun
power cannot able six size dark ball material special heavy fine pair
circle include built
""".split()

CATEGORY_BATCHES = """
act action activity actually afternoon afraid age agree ahead alive
allow alone already although american amount anger angle angry
apartment appear apple arm army arrive art article attention aunt
autumn average awake baby bad bag ball bank bar barn basket battle
beach bear beat beautiful bed bedroom beside bell belong belt bench
bend beneath berry beyond bicycle bill bird birth birthday bit bite
bitter blanket blood blow blue board bone border born borrow boss
bottle bottom bought bowl branch brave bread break breakfast breath
brick bridge brief bright broad broke broken brother brown brush
bucket build burn bus bush business busy butter button buy cabin cake
calm camp capital captain care careful carried case cat catch cattle
caught cause cent center century chain chair chance character charge
chart chase cheap cheese chest chicken chief child choice choose
chose church circus claim clean climb clock cloth clothes cloud club
coast coat coffee coin collect college company compare condition
consider contrast control cook cool copper copy corn corner cost
cotton count cover cow crack cream creature crew crop cross crowd
crown cry cup curious current curve customer dance danger dangerous
date daughter dead deal dear death decide decision deer degree
delight demand describe desert design desk detail develop device
dictionary died difference difficult dinner direct direction
discover dish distance divide doctor dollar double doubt dozen dream
dress drink drive drop drove dull dust duty eager ear earn east edge
effect effort egg eight either electric electricity else empty
energy engine enjoy enter entire equal escape especially europe
evening event exact exactly except excited exciting exercise expect
experience experiment express eye fair fallen familiar famous fancy
farmer farther fear feature fed fellow felt fence fewer fight fill
final finger finish firm fit flag flat flew floor flow flower fog
folk fond foot forest forever forget forth fortune forward fought
fox frame free fresh friend friendly frighten frog fruit fuel fun
funny furniture future gain garden gas gate gather general gentle
gift glad glass goes gold golden gone goodbye grain grand grass gray
grew grip grown guard guess guide gun habit hair hall hang happen
happy harbor harder hat hate hay health healthy heart heavy height
hello hen hidden hide hill history hit hole holiday hollow honey
honor hope hospital hour huge human hunger hungry hunt hurried hurry
hurt husband ice imagine immediately importance impossible improve
inch indeed indicate industry information instant instead interest
invent iron itself jar job join joined journey joy judge jump jumped
keen key kick kill kitchen knee knife knock knowledge lack ladder
lady lake lamp language laid larger largest late laugh laughter law
lay lead leader leaf league lean leather led leg lend length lesson
level liberty lie lift lifted limb line lion lips liquid listen
literature load loan local locate lock log lonely longer loose lord
lose loss lost lot loud love lovely lower luck lunch lying machine
mad mail main major manage manner map market master match matter
meal meant meat medicine meet melted member memory mental merely
metal method middle midnight might mighty milk mill mind mine
mission mistake mix model modern moment month moon moral mostly
motion motor mount mouse mouth movement movie mud murder muscle
museum mysterious nail nation native natural nature nearby nearer
nearly neat neck needle neighbor neither nest net never nice
niece nine nobody nodded noise none noon nor nose note nothing
noticed noun nuts oak obey object observe occur offer office
officer official oil older oldest onto opinion opposite orange
orbit organization original ought outer outline outside oxygen pace
pack package paid pain paint palace pale pan paragraph parallel
parent park particular partly party pass past path pattern pay peace
pen pencil per percent perfect perhaps period permit pet phrase pick
pie pig pile pilot pine pink pipe pitch plain plates pleasant please
pleasure plenty plural pocket poem poet poetry police policeman
political pond pony pool poor popular population porch position
positive possible possibly pot potatoes pound pour powder powerful
practical practice prepare present president press pretty prevent
previous price pride primitive principal print private prize
probably process program progress promise proper properly property
protect proud prove provide public pull pupil pure purple purpose
push quarter queen quick quiet quite rabbit race radio rain raise
ran ranch range rapidly rate rather raw rays reach reader ready
realize reason recall receive recent recently recognize record
refer refused region regular related religion remain remarkable
remove repeat replace replied report represent request require
research respect result return review rhyme rhythm rice rich ride
riding right ring rise rising road roar rob rode roll roof root rope
rose rough row royal rubbed rubber rule ruler rush sad saddle safe
safety sail sale salt sand sat satellites satisfied save scale scene
science score screen search season seat section seed seeing seems
seldom select selection sell send sense sent separate series serious
serve service settle settlers seven sex shade shadow shake shaking
shall shallow shape share sharp sheep sheet shelf shell shelter
shine shinning shirt shoe shoot shop shore shot shoulder shout shut
sick sight sign signal silence silent silk silly silver similar
simple simplest simply sincere single sister sitting situation six
skill skin sky slabs slave sleep slept slide slight slip slipped
slope slow smaller smallest smell smile smoke smooth snake snow
soap social society soft soil solar sold soldier solid solution
solve someone somehow someone something sometime somewhere son sort
sound source space speak special speech speed spend spent spider
spin spirit spite spoken sport spread spring square stage stairs
stand star stared station steady steam steel steep stems step stick
stiff stock stomach stone stopped store storm stranger straw stream
strength stretch strike string strip stronger struck structure
struggle stuck student studied studying subject substance success
successful sudden suddenly sugar suggest suit summer supper supply
support suppose surprise surrounded swam sweet swept swim swimming
swing sword symbol syllable tail tales tank tape task taste taught
tax tea teach teacher team tear telephone television temperature
ten tent term terrible test theory therefore thick thin third
thirty thou thread threw throat throne through throw thrown thumb
thus tide tie tight till tin tiny tip tired title tobacco tone
tongue tonight tool tooth total touch tour toward tower track trade
traffic trail train transportation trap treated tree triangle
tribe trick trip troops tropical trouble truck trunk truth tube
tune turn twelve twenty twice type typical uncle underline
understanding unhappy uniform union unknown unless unusual upper
upward use useful valley valuable value vapor variety various vast
vegetable verse vessels victory view village visit visitor vote
wagon wait walk wall want warn wash waste watch weak wealth weather
web week weigh weight welcome west wet whale wheat wheel whenever
wherever whether whispered whistle wide widely wife wild willing
win window wing winter wire wise wish within wolf wonder wonderful
wooden wool worker worried worry worse worth wrapped wrist writer
written wrong wrote yard yellow yesterday younger zero zoo
""".split()

INFLECTED_AND_CONTRACTED = """
says gets makes takes comes goes knows thinks looks wants gives uses
finds tells asks works seems feels tries leaves calls moves lives
believes brings happens writes provides sits stands loses pays meets
includes continues sets learns changes leads understands watches
follows stops creates speaks reads spends grows opens walks wins
offers remembers considers appears buys serves dies sends builds
stays falls cuts reaches kills remains likes starts plays runs
turns helps shows hears lets puts means keeps begins
days years ways things words times people names places houses hands
eyes waters sounds numbers parts men women children students
teachers friends families books trees rivers fields mountains
villages towns cities streets roads doors windows walls rooms
tables chairs horses dogs cats birds fishes stones flowers gardens
farms mills ships boats stars nights mornings evenings seasons
winters summers stories songs letters papers pages lines points
groups sides feet miles areas marks problems pieces orders doors
don't it's i'm can't didn't isn't that's there's he's she's we're
they're you're i've i'll won't wasn't couldn't wouldn't shouldn't
doesn't aren't weren't let's what's who's you'll you've we've
they've i'd hasn't haven't hadn't
monday tuesday wednesday thursday friday saturday sunday january
february march april june july august september october november
december north south east west spring summer autumn winter
""".split()

FUNCTION_WORDS = """
a about above according across after afterwards again against albeit
all almost alone along already also although always am among amongst
an and another any anybody anyhow anyone anything anyway anywhere are
around as at be became because become becomes becoming been before
beforehand behind being below beside besides between beyond both but
by can cannot could despite did do does done down during each either
else elsewhere enough etc even ever every everybody everyone
everything everywhere except few fewer for former formerly from
further furthermore had has have having he hence her here hereafter
hereby herein hereupon hers herself him himself his how however i if
in indeed inside instead into is it its itself just latter latterly
least less lest like little many may me meanwhile might mine more
moreover most mostly much must my myself namely near neither never
nevertheless next no nobody none nonetheless nor not nothing
notwithstanding now nowhere of off often on once one only onto or
other others otherwise our ours ourselves out outside over own per
perhaps quite rather regarding same seem seemed seeming seems several
shall she should since so some somebody somehow someone something
sometime sometimes somewhat somewhere still such than that the their
theirs them themselves then thence there thereafter thereby therefore
therein thereupon these they thing this those though through
throughout thru thus till to together too toward towards under
underneath unless unlike until unto up upon us used via was we well
were what whatever when whence whenever where whereafter whereas
whereby wherein whereupon wherever whether which while whither who
whoever whole whom whose why will with within without would yet you
your yours yourself yourselves
""".split()

CONTRACTION_PAIRS = [
    ("I'll", "I will"),
    ("aren't", "are not"),
    ("they're", "they are"),
    ("don't", "do not"),
    ("can't", "cannot"),
    ("it's", "it is"),
    ("I'm", "I am"),
    ("you're", "you are"),
    ("we're", "we are"),
    ("isn't", "is not"),
    ("wasn't", "was not"),
    ("weren't", "were not"),
    ("didn't", "did not"),
    ("doesn't", "does not"),
    ("won't", "will not"),
    ("wouldn't", "would not"),
    ("couldn't", "could not"),
    ("shouldn't", "should not"),
    ("haven't", "have not"),
    ("hasn't", "has not"),
    ("hadn't", "had not"),
    ("I've", "I have"),
    ("you've", "you have"),
    ("we've", "we have"),
    ("they've", "they have"),
    ("I'd", "I would"),
    ("you'll", "you will"),
    ("he's", "he is"),
    ("she's", "she is"),
]

EASY_WORD_COUNT = 1500
ZIPF_SCALE = 2_000_000_000
ZIPF_EXPONENT = 1.05


def ranked_common_words():
    seen = set()
    ranked = []
    for word in RANKED_CORE + CATEGORY_BATCHES + INFLECTED_AND_CONTRACTED:
        w = word.lower()
        if w not in seen:
            seen.add(w)
            ranked.append(w)
    return ranked


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    ranked = ranked_common_words()

    (OUT_DIR / "common_words.txt").write_text("\n".join(ranked) + "\n", encoding="utf-8")

    rows = [
        f"{word}\t{max(1, round(ZIPF_SCALE / (rank + 1) ** ZIPF_EXPONENT))}"
        for rank, word in enumerate(ranked)
    ]
    (OUT_DIR / "word_frequencies.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")

    from sklearn.feature_extraction._stop_words import ENGLISH_STOP_WORDS

    (OUT_DIR / "stop_words.txt").write_text(
        "\n".join(sorted(ENGLISH_STOP_WORDS)) + "\n", encoding="utf-8"
    )

    (OUT_DIR / "function_words.txt").write_text(
        "\n".join(sorted(set(FUNCTION_WORDS))) + "\n", encoding="utf-8"
    )

    easy = sorted(ranked[:EASY_WORD_COUNT])
    (OUT_DIR / "easy_words.txt").write_text("\n".join(easy) + "\n", encoding="utf-8")

    pair_rows = [f"{c}\t{e}" for c, e in CONTRACTION_PAIRS]
    (OUT_DIR / "contractions.tsv").write_text("\n".join(pair_rows) + "\n", encoding="utf-8")

    print(f"common words: {len(ranked)}")
    print(f"function words: {len(set(FUNCTION_WORDS))}")
    print(f"contraction pairs: {len(CONTRACTION_PAIRS)}")


if __name__ == "__main__":
    main()
