"""Finite words over small alphabets and the paperfolding constructions.

Symbols are stored 0-based as bytes no matter how a word is customarily
spelled; :func:`present` renders the usual spellings (the four-letter
squarefree word over 1234, the Carpi word over odd digits). Every
construction takes its folding instructions explicitly, so the ordinary
paperfolding word and any perturbed variant share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

MAX_ALPHABET = 16
_CHARS = "0123456789abcdef"


class InsufficientFoldingBits(ValueError):
    """Raised when a construction needs more folding instructions than given."""


@dataclass(frozen=True)
class Word:
    """An immutable word; symbols are ints in ``range(alphabet_size)``."""

    symbols: bytes
    alphabet_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", bytes(self.symbols))
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}")
        if self.symbols and max(self.symbols) >= self.alphabet_size:
            raise ValueError("symbol out of range for alphabet")

    @classmethod
    def from_symbols(cls, symbols: Sequence[int], alphabet_size: int) -> "Word":
        return cls(bytes(symbols), alphabet_size)

    @classmethod
    def from_text(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse one digit per symbol, 0-9 then a-f for alphabets past ten."""
        try:
            symbols = bytes(_CHARS.index(c) for c in text)
        except ValueError:
            raise ValueError(f"word text may only contain {_CHARS!r}") from None
        if alphabet_size is None:
            alphabet_size = max(symbols) + 1 if symbols else 1
        return cls(symbols, alphabet_size)

    def to_text(self) -> str:
        return "".join(_CHARS[s] for s in self.symbols)

    def prefix(self, n: int) -> "Word":
        if n > len(self.symbols):
            raise ValueError(f"prefix of length {n} from a word of length {len(self.symbols)}")
        return Word(self.symbols[:n], self.alphabet_size)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols, max(self.alphabet_size, other.alphabet_size))

    def __str__(self) -> str:
        return self.to_text()


def complement(w: Word) -> Word:
    """Swap 0 and 1. Defined for binary words only."""
    if w.alphabet_size != 2:
        raise ValueError("complement is only defined over a binary alphabet")
    return Word(bytes(1 - s for s in w.symbols), 2)


def reverse_word(w: Word) -> Word:
    return Word(w.symbols[::-1], w.alphabet_size)


@dataclass(frozen=True)
class FoldingSequence:
    """A stream of folding instructions, one bit per fold.

    ``ordinary()`` is the all-zero stream of unbounded length. A parsed
    finite stream knows exactly how many instructions it holds and refuses
    constructions that would read past the end.
    """

    bits: tuple[int, ...] = ()
    infinite_zeros: bool = False

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("folding instructions must be 0 or 1")

    @classmethod
    def ordinary(cls) -> "FoldingSequence":
        return cls((), True)

    @classmethod
    def parse(cls, text: str) -> "FoldingSequence":
        if text == "ordinary":
            return cls.ordinary()
        if not text or set(text) - {"0", "1"}:
            raise ValueError("folding instructions must be 'ordinary' or a 0/1 string")
        return cls(tuple(int(c) for c in text))

    def require(self, count: int) -> None:
        if not self.infinite_zeros and len(self.bits) < count:
            raise InsufficientFoldingBits(
                f"need {count} folding instructions, have {len(self.bits)}"
            )

    def bit(self, i: int) -> int:
        if i < len(self.bits):
            return self.bits[i]
        if self.infinite_zeros:
            return 0
        raise InsufficientFoldingBits(f"no folding instruction at index {i}")


def folding_bits_needed(n: int) -> int:
    """Instructions consumed by a length-``n`` paperfolding prefix."""
    return n.bit_length()


def paperfolding_prefix(folds: FoldingSequence, n: int) -> Word:
    """First ``n`` letters of the paperfolding word with the given instructions.

    Position p is resolved by writing p + 1 = 2**e * (2q + 1); the letter is
    the e-th instruction flipped when q is odd. With all-zero instructions
    this starts 0010011000110110.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    folds.require(folding_bits_needed(n))
    bits = folds.bits
    known = len(bits)  # past this, require() guarantees we are all-zero
    out = bytearray(n)
    for p in range(n):
        tail = p + 1
        e = (tail & -tail).bit_length() - 1
        out[p] = (bits[e] if e < known else 0) ^ ((tail >> (e + 1)) & 1)
    return Word(bytes(out), 2)


def perturbed_prefix(folds: FoldingSequence, k: int) -> Word:
    """Unfold k times: F(0) is the first instruction and
    F(i+1) = F(i), next instruction, reversed complement of F(i).

    The result has length 2**(k+1) - 1 and equals the paperfolding prefix
    built from the same instructions.
    """
    if k < 0:
        raise ValueError("fold count must be nonnegative")
    folds.require(k + 1)
    cur = Word(bytes([folds.bit(0)]), 2)
    for i in range(1, k + 1):
        middle = Word(bytes([folds.bit(i)]), 2)
        cur = cur + middle + reverse_word(complement(cur))
    return cur


@dataclass
class Morphism:
    """A substitution sending each symbol to a fixed image word.

    ``alphabet_size`` bounds the output symbols; the domain is just the
    key set, so codings between different alphabets are morphisms too.
    """

    images: Mapping[int, tuple[int, ...]]
    alphabet_size: int

    def __post_init__(self) -> None:
        self.images = {s: tuple(img) for s, img in self.images.items()}
        if not self.images:
            raise ValueError("a morphism needs at least one image")
        for s, img in self.images.items():
            if not img:
                raise ValueError(f"empty image for symbol {s}")
            if max(img) >= self.alphabet_size or min(img) < 0:
                raise ValueError(f"image of {s} leaves the alphabet")


def apply_morphism(m: Morphism, w: Word) -> Word:
    try:
        out = b"".join(bytes(m.images[s]) for s in w.symbols)
    except KeyError as exc:
        raise ValueError(f"no image for symbol {exc.args[0]}") from None
    return Word(out, m.alphabet_size)


def iterate_morphism(m: Morphism, seed: Word, min_len: int) -> Word:
    """Fixed-point prefix: apply ``m`` to ``seed`` until length ``min_len``.

    Requires the image of the seed's first symbol to start with that symbol
    (otherwise the iterates do not extend each other). Each iterate must
    extend the previous one and strictly grow whenever more length is needed.
    """
    if len(seed) == 0:
        raise ValueError("seed must be nonempty")
    first = seed.symbols[0]
    if first not in m.images:
        raise ValueError(f"no image for symbol {first}")
    if m.images[first][0] != first:
        raise ValueError("seed must begin its own image")
    cur = seed
    while len(cur) < min_len:
        nxt = apply_morphism(m, cur)
        if len(nxt) == len(cur):
            raise ValueError("morphism does not grow from this seed")
        if nxt.symbols[: len(cur)] != cur.symbols:
            raise ValueError("iterates do not extend each other")
        cur = nxt
    return cur.prefix(min_len)


def relabel(w: Word, mapping: Mapping[int, int]) -> Word:
    try:
        symbols = bytes(mapping[s] for s in w.symbols)
    except KeyError as exc:
        raise ValueError(f"no relabeling for symbol {exc.args[0]}") from None
    return Word(symbols, max(mapping.values()) + 1)


def recode_even_positions(w: Word) -> Word:
    # Input spells a binary word with 1 for zeros and 4 for ones. Odd
    # positions survive; position 4n becomes 2 and position 4n+2 becomes 3.
    if any(s not in (1, 4) for s in w.symbols):
        raise ValueError("expected a word over symbols 1 and 4")
    out = bytearray(w.symbols)
    for i in range(0, len(out), 2):
        out[i] = 2 if i % 4 == 0 else 3
    return Word(bytes(out), 5)


# The Carpi substitution in its customary odd-digit spelling. Iterated from
# seed 5 it opens 51535173; renaming 5,1,3,7 to 1,2,3,4 turns the tail after
# the first letter into the four-letter squarefree word below.
CARPI_MORPHISM = Morphism({1: (5, 3), 3: (7, 3), 5: (5, 1), 7: (7, 1)}, 8)
_CARPI_TO_INTERNAL = {5: 0, 1: 1, 3: 2, 7: 3}

# Letterwise codings, both over 0-based symbols.
TERNARY_CODING = Morphism({0: (0, 0), 1: (1, 1), 2: (1, 2), 3: (0, 2)}, 3)
BLOCK_CODING = Morphism({0: (0, 1, 1, 0), 1: (0, 1, 0, 1), 2: (0, 0, 0, 1), 3: (0, 1, 1, 1)}, 2)


def carpi_word(n: int) -> Word:
    """Length-``n`` prefix of the Carpi fixed point, 0-based symbols."""
    seed = Word(bytes([5]), CARPI_MORPHISM.alphabet_size)
    return relabel(iterate_morphism(CARPI_MORPHISM, seed, n), _CARPI_TO_INTERNAL)


def four_letter_squarefree(folds: FoldingSequence, n: int) -> Word:
    """The four-letter companion of the paperfolding word, 0-based.

    Built by stamping the residue pattern onto even positions of the
    relabeled paperfolding prefix. With ordinary instructions the first
    sixteen letters spell 2131243121342431 in 1234 notation.
    """
    f = paperfolding_prefix(folds, n)
    spelled = relabel(f, {0: 1, 1: 4})
    return relabel(recode_even_positions(spelled), {1: 0, 2: 1, 3: 2, 4: 3})


def ternary_overlapfree(folds: FoldingSequence, n: int) -> Word:
    """Letterwise coding of the four-letter word into three symbols."""
    v = four_letter_squarefree(folds, (n + 1) // 2)
    return apply_morphism(TERNARY_CODING, v).prefix(n)


def binary_large_squarefree(folds: FoldingSequence, n: int) -> Word:
    """Block coding of the four-letter word into four-bit chunks."""
    v = four_letter_squarefree(folds, (n + 3) // 4)
    return apply_morphism(BLOCK_CODING, v).prefix(n)


# Customary spellings for the constructions above, keyed by CLI name.
PRESENTATIONS = {
    "paperfolding": "01",
    "v": "1234",
    "carpi": "5137",
    "overlap3": "012",
    "bigsq2": "01",
}


def present(w: Word, name: str) -> str:
    """Render ``w`` in the customary spelling registered under ``name``."""
    table = PRESENTATIONS[name]
    if w.symbols and max(w.symbols) >= len(table):
        raise ValueError(f"word does not fit the {name} alphabet")
    return "".join(table[s] for s in w.symbols)
