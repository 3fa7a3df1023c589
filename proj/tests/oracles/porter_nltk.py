"""Frozen Porter stems from NLTK's PorterStemmer in ORIGINAL_ALGORITHM mode.

Words shorter than three letters are excluded: NLTK stems them, the
reference implementation leaves them alone.
"""
from nltk.stem.porter import PorterStemmer

WORDS = """
strolled policemen officers terminated fired caresses ponies ties caress cats
feed agreed plastered bled motoring sing conflated troubled sized hopping
tanned falling hissing fizzed failing filing happy sky relational conditional
rational valenci hesitanci digitizer conformabli radicalli differentli vileli
analogousli vietnamization predication operator feudalism decisiveness
hopefulness callousness formaliti sensitiviti sensibiliti triplicate formative
formalize electriciti electrical hopeful goodness revival allowance inference
airliner gyroscopic adjustable defensible irritant replacement adjustment
dependent adoption homologou communism activate angulariti homologous
effective bowdlerize probate rate cease controll roll generalization
oscillators corruption probe terminate termination walking explored town city
around they took walk explore several the running runs ran generously
abilities sensational hopelessness happiness agreement
""".split()

if __name__ == "__main__":
    s = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    for w in WORDS:
        if len(w) >= 3:
            print(f'      {{"{w}", "{s.stem(w)}"}},')
