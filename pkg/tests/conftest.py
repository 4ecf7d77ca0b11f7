import pytest

from braidmetric import BraidWord, parse_word


def W(text, n=None) -> BraidWord:
    return parse_word(text, n)


@pytest.fixture
def word():
    return W
