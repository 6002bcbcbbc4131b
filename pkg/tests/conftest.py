import pytest

from simonk import Alphabet, parse_word

AB = Alphabet("ab")
ABC = Alphabet("abc")


def W(text, alphabet="ab"):
    """Word from text, ``-`` being the empty word."""
    return parse_word("" if text == "-" else text, Alphabet(alphabet) if isinstance(alphabet, str) else alphabet)


@pytest.fixture
def w():
    return W
