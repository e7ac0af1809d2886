from pathlib import Path

import pytest

from semverb.cli import default_lexicon
from semverb.lexicalizer import Lexicalizer

CORPUS = Path(__file__).parent / "corpus"
REPO_ROOT = Path(__file__).parent.parent


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def lex(lexicon):
    return Lexicalizer(lexicon)


def corpus_text(name: str) -> str:
    return (CORPUS / name).read_text(encoding="utf-8")
