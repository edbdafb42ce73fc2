"""Small built-in word lists for the rule-based annotators.

Openly assembled stand-ins: common opinion words, US place names, federal
institutions and political group nouns.  Kept deliberately small; quality
beyond schema-validity is not a goal of this generator.
"""

POSITIVE = frozenset(
    "good great best better strong proud safe fair honest effective "
    "affordable thriving successful clean right wonderful".split()
)

NEGATIVE = frozenset(
    "bad worse worst terrible awful horrible broken unfair dishonest "
    "dangerous failing poor weak disastrous wrong corrupt reckless".split()
)

PERSON_TITLES = frozenset(
    "mr mrs ms dr senator governor secretary president congressman "
    "congresswoman general".split()
)

# frequent US surnames; catches person mentions in lowercased text
SURNAMES = frozenset(
    "smith johnson williams brown jones garcia miller davis wilson "
    "anderson thomas taylor moore jackson martin lee walker hall young "
    "king wright scott green baker adams nelson carter mitchell roberts "
    "turner phillips campbell parker evans edwards collins stewart".split()
)

INSTITUTIONS = frozenset(
    "congress senate house pentagon treasury nato un fbi cia epa irs "
    "osha fema nasa medicare medicaid court supreme whitehouse".split()
)

PLACES = frozenset(
    "ohio texas florida michigan nevada arizona colorado virginia "
    "wisconsin iowa pennsylvania georgia carolina washington oregon "
    "denver cleveland miami phoenix tucson reno charlotte tampa chicago "
    "detroit boston dallas houston atlanta philadelphia america russia "
    "china mexico iran iraq syria israel".split()
)

GROUPS = frozenset(
    "republican republicans democrat democrats american americans "
    "federal national liberal conservative".split()
)
