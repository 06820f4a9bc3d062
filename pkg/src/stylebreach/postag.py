"""Rule/lexicon part-of-speech tagger.

Closed-class lookups first, then suffix rules, defaulting to noun. The
tagset covers exactly what the lexical feature ratios need.
"""

import re

PERSONAL_PRONOUNS = frozenset(
    "i you he she it we they me him her us them mine yours hers ours theirs "
    "myself yourself himself herself itself ourselves yourselves themselves".split()
)

PRONOUNS = PERSONAL_PRONOUNS | frozenset(
    "who whom whose which what this that these those anybody anyone anything "
    "everybody everyone everything nobody none somebody someone something "
    "each either neither one oneself".split()
)

PREPOSITIONS = frozenset(
    "aboard about above across after against along amid among around as at "
    "atop before behind below beneath beside besides between beyond by "
    "concerning despite down during except for from in inside into like near "
    "of off on onto out outside over past per regarding since through "
    "throughout till to toward towards under underneath until unto up upon "
    "via with within without".split()
)

COORD_CONJUNCTIONS = frozenset("and but or nor for yet so".split())

SUBORD_CONJUNCTIONS = frozenset(
    "although because if unless while whereas whenever wherever once since "
    "though whether".split()
)

DETERMINERS = frozenset(
    "a an the this that these those each every either neither some any no "
    "all both half several enough such another much many more most few "
    "little less least my your his her its our their".split()
)

MODALS = frozenset(
    "can could may might must shall should will would ought dare need".split()
)

INTERJECTIONS = frozenset(
    "oh ah wow ouch hey alas hurrah hmm uh um er oops yay aha whoa hooray "
    "phew ugh yikes huh gosh darn".split()
)

AUX_VERBS = frozenset(
    "am is are was were be been being have has had having do does did doing "
    "done get gets got gotten getting".split()
)

COMMON_ADVERBS = frozenset(
    "not never always often sometimes seldom soon now then here there very "
    "too quite rather almost also just still yet again perhaps maybe however "
    "instead indeed already even ever nowhere somewhere anywhere everywhere "
    "away back down up well more most less least far fast hard late early "
    "together apart twice once".split()
)

COMMON_ADJECTIVES = frozenset(
    "good bad big small large little old new young long short high low hot "
    "cold warm cool full empty hard soft easy heavy light dark bright fast "
    "slow early late near far right wrong true false rich poor strong weak "
    "happy sad great fine nice kind wild calm clear deep wide thin thick "
    "clean dirty dry wet free busy quiet loud safe whole same other next "
    "last first second third best better worse worst open real sure ready "
    "able main certain common recent similar different important".split()
)

COMMON_VERBS = frozenset(
    "go goes went gone make makes made take takes took taken come comes came "
    "see sees saw seen know knows knew known think thinks thought say says "
    "said tell tells told find finds found give gives gave given use uses "
    "used work works worked call calls called try tries tried ask asks asked "
    "feel feels felt become becomes became leave leaves left put puts keep "
    "keeps kept let lets begin begins began begun seem seems seemed help "
    "helps helped show shows showed shown hear hears heard play plays played "
    "run runs ran move moves moved live lives lived believe believes "
    "believed bring brings brought happen happens happened write writes "
    "wrote written sit sits sat stand stands stood lose loses lost pay pays "
    "paid meet meets met include includes included continue continues "
    "continued set sets learn learns learned change changes changed lead "
    "leads led understand understands understood watch watches watched "
    "follow follows followed stop stops stopped create creates created "
    "speak speaks spoke spoken read reads spend spends spent grow grows "
    "grew grown open opens opened walk walks walked win wins won offer "
    "offers offered remember remembers remembered love loves loved consider "
    "considers considered appear appears appeared buy buys bought wait "
    "waits waited serve serves served die dies died send sends sent expect "
    "expects expected build builds built stay stays stayed fall falls fell "
    "fallen cut cuts reach reaches reached kill kills killed remain remains "
    "remained want wants wanted look looks looked need needs needed start "
    "starts started turn turns turned like likes liked".split()
)

ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ish", "less", "ic", "ary")
ADV_SUFFIXES = ("ly", "ward", "wards", "wise")
NOUN_SUFFIXES = (
    "tion", "sion", "ment", "ness", "ity", "ship", "hood", "ism", "ist",
    "ance", "ence", "dom", "age",
)
VERB_SUFFIXES = ("ize", "ise", "ify", "ate")

WORD_RE = re.compile(r"^[A-Za-z][A-Za-z'’-]*$")
NUM_RE = re.compile(r"^[0-9][0-9,.]*$")


def tag(token, sentence_initial=False):
    """Tag one token. sentence_initial suppresses the capitalized-noun rule."""
    if NUM_RE.match(token):
        return "num"
    if not WORD_RE.match(token):
        return "punct" if not token.isalnum() else "other"
    w = token.lower()
    if w in MODALS:
        return "modal"
    if w in PERSONAL_PRONOUNS:
        return "pron_personal"
    if w in PRONOUNS:
        return "pron"
    if w in DETERMINERS:
        return "det"
    if w in PREPOSITIONS:
        return "prep"
    if w in COORD_CONJUNCTIONS:
        return "conj"
    if w in SUBORD_CONJUNCTIONS:
        return "conj_sub"
    if w in INTERJECTIONS:
        return "intj"
    if w in AUX_VERBS or w in COMMON_VERBS:
        return "verb"
    if w in COMMON_ADVERBS:
        return "adv"
    if w in COMMON_ADJECTIVES:
        return "adj"
    if w.endswith(ADV_SUFFIXES):
        return "adv"
    if w.endswith(VERB_SUFFIXES) or w.endswith(("ing", "ed")):
        return "verb"
    if w.endswith(ADJ_SUFFIXES):
        return "adj"
    if w.endswith(NOUN_SUFFIXES):
        return "noun"
    if token[0].isupper() and not sentence_initial:
        return "noun"
    return "noun"


def tag_tokens(tokens, sentence_starts=frozenset()):
    """Tag a token sequence; indices in sentence_starts are treated as
    sentence-initial for the capitalization rule.
    """
    return [tag(t, sentence_initial=(i in sentence_starts)) for i, t in enumerate(tokens)]
