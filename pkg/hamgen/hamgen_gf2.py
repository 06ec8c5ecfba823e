"""Linear algebra over GF(2) on bit-packed edge vectors."""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

try:
    from .hamgen_errors import SpanError, WidthMismatchError
except ImportError:
    from hamgen_errors import SpanError, WidthMismatchError


WORD = 64


def _word_count(width):
    return max(1, -(-width // WORD))


def _pack(bits, width):
    padded = np.zeros(_word_count(width) * WORD, dtype=np.uint8)
    padded[:width] = np.asarray(bits, dtype=np.uint8)[:width] & 1
    return np.packbits(padded, bitorder="little").view("<u8")


def _lowest(words):
    nonzero = np.flatnonzero(words)
    if nonzero.size == 0:
        return None
    w = int(nonzero[0])
    word = int(words[w])
    return w * WORD + (word & -word).bit_length() - 1


class EdgeVector:
    __slots__ = ("width", "words")

    def __init__(self, width, words):
        self.width = width
        self.words = words

    @classmethod
    def zeros(cls, width):
        return cls(width, np.zeros(_word_count(width), dtype="<u8"))

    @classmethod
    def from_bits(cls, bits):
        bits = list(bits)
        return cls(len(bits), _pack(bits, len(bits)))

    @classmethod
    def from_support(cls, width, indices):
        bits = np.zeros(width, dtype=np.uint8)
        for i in indices:
            if not 0 <= i < width:
                raise IndexError("bit {} outside width {}".format(i, width))
            bits[i] ^= 1
        return cls(width, _pack(bits, width))

    def bits(self):
        raw = np.unpackbits(self.words.view(np.uint8), bitorder="little")
        return raw[: self.width].astype(np.uint8)

    def support(self):
        return tuple(int(i) for i in np.flatnonzero(self.bits()))

    def weight(self):
        return int(self.bits().sum())

    def is_zero(self):
        return not self.words.any()

    def lowest(self):
        return _lowest(self.words)

    def __getitem__(self, i):
        if not 0 <= i < self.width:
            raise IndexError("bit {} outside width {}".format(i, self.width))
        return (int(self.words[i // WORD]) >> (i % WORD)) & 1

    def __add__(self, other):
        _check_widths([self, other])
        return EdgeVector(self.width, self.words ^ other.words)

    def __eq__(self, other):
        if not isinstance(other, EdgeVector):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.words, other.words)

    def __hash__(self):
        return hash((self.width, self.words.tobytes()))

    def to_string(self):
        return "".join(str(int(b)) for b in self.bits())

    def __repr__(self):
        return "EdgeVector({})".format(self.to_string())


def _check_widths(vectors):
    widths = {v.width for v in vectors}
    if len(widths) > 1:
        raise WidthMismatchError("vectors have mixed widths {}".format(sorted(widths)))


class _Echelon:
    # Rows keyed by their lowest set bit; each row remembers which inputs it combines.

    def __init__(self):
        self.rows = {}

    def reduce(self, words, combo):
        while True:
            col = _lowest(words)
            if col is None or col not in self.rows:
                return col, words, combo
            row_words, row_combo = self.rows[col]
            words = words ^ row_words
            combo ^= row_combo

    def insert(self, words, combo):
        col, words, combo = self.reduce(words, combo)
        if col is None:
            return False
        self.rows[col] = (words, combo)
        return True


def rank(vectors):
    vectors = list(vectors)
    _check_widths(vectors)
    ech = _Echelon()
    return sum(1 for i, v in enumerate(vectors) if ech.insert(v.words.copy(), 1 << i))


def independent_indices(vectors):
    vectors = list(vectors)
    _check_widths(vectors)
    ech = _Echelon()
    return [i for i, v in enumerate(vectors) if ech.insert(v.words.copy(), 1 << i)]


def in_span(v, gens):
    gens = list(gens)
    _check_widths(gens + [v])
    ech = _Echelon()
    for i, g in enumerate(gens):
        ech.insert(g.words.copy(), 1 << i)
    col, _, combo = ech.reduce(v.words.copy(), 0)
    if col is not None:
        return None
    return [(combo >> i) & 1 for i in range(len(gens))]


def combine(gens, coefficients, width=None):
    gens = list(gens)
    if width is None:
        if not gens:
            raise ValueError("width is required for an empty combination")
        width = gens[0].width
    total = EdgeVector.zeros(width)
    for g, c in zip(gens, coefficients):
        if c:
            total = total + g
    return total


def span_elements(gens):
    gens = list(gens)
    if not gens:
        return set()
    out = set()
    for coefficients in product((0, 1), repeat=len(gens)):
        out.add(combine(gens, coefficients))
    return out


class GF2Matrix:
    def __init__(self, rows, row_labels=None, col_labels=None):
        rows = np.asarray(rows, dtype=np.uint8) & 1
        if rows.ndim != 2:
            raise ValueError("matrix rows must form a 2-D array")
        self.rows = rows
        height, width = rows.shape
        self.row_labels = tuple(row_labels) if row_labels else tuple(
            "r{}".format(i) for i in range(height)
        )
        self.col_labels = tuple(col_labels) if col_labels else tuple(
            "c{}".format(j) for j in range(width)
        )
        if len(self.row_labels) != height or len(self.col_labels) != width:
            raise ValueError("label counts do not match matrix shape {}".format(rows.shape))
        if len(set(self.row_labels)) != height or len(set(self.col_labels)) != width:
            raise ValueError("matrix labels must be unique")

    @classmethod
    def identity(cls, k):
        return cls(np.eye(k, dtype=np.uint8))

    @classmethod
    def from_strings(cls, lines, row_labels=None, col_labels=None):
        return cls([[int(ch) for ch in line] for line in lines], row_labels, col_labels)

    @property
    def shape(self):
        return self.rows.shape

    def transpose(self):
        return GF2Matrix(self.rows.T.copy(), self.col_labels, self.row_labels)

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise WidthMismatchError(
                "cannot multiply {} by {}".format(self.shape, other.shape)
            )
        product_rows = (self.rows.astype(np.int64) @ other.rows.astype(np.int64)) % 2
        return GF2Matrix(product_rows, self.row_labels, other.col_labels)

    def same_bits(self, other):
        return self.shape == other.shape and np.array_equal(self.rows, other.rows)

    def diff(self, other):
        if self.shape != other.shape:
            return [("shape", self.shape, other.shape)]
        out = []
        for i, j in zip(*np.nonzero(self.rows != other.rows)):
            out.append((self.row_labels[i], self.col_labels[j], int(self.rows[i, j])))
        return out

    def row_strings(self):
        return ["".join(str(int(b)) for b in row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return (
            self.same_bits(other)
            and self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
        )

    def __repr__(self):
        return "GF2Matrix({})".format("/".join(self.row_strings()))


def chain_matrix(vectors, col_labels=None, row_labels=None):
    vectors = list(vectors)
    _check_widths(vectors)
    if not vectors:
        raise ValueError("chain matrix needs at least one column")
    columns = np.stack([v.bits() for v in vectors], axis=1)
    return GF2Matrix(columns, row_labels, col_labels)


def submatrix(m, row_indices):
    row_indices = list(row_indices)
    return GF2Matrix(m.rows[row_indices, :], [m.row_labels[i] for i in row_indices], m.col_labels)


def invert(m):
    height, width = m.shape
    if height != width:
        raise ValueError("only square matrices are invertible, got {}".format(m.shape))
    aug = np.concatenate([m.rows.copy(), np.eye(height, dtype=np.uint8)], axis=1)
    for c in range(height):
        rows = np.flatnonzero(aug[c:, c])
        if rows.size == 0:
            return None
        p = c + int(rows[0])
        if p != c:
            aug[[c, p]] = aug[[p, c]]
        ones = np.flatnonzero(aug[:, c])
        ones = ones[ones != c]
        if ones.size:
            aug[ones, :] ^= aug[c, :]
    return GF2Matrix(aug[:, height:], m.col_labels, m.row_labels)


def invert_5x5(m):
    if m.shape != (5, 5):
        raise ValueError("expected a 5x5 matrix, got {}".format(m.shape))
    return invert(m)


@dataclass(frozen=True)
class SplitCertificate:
    b0: int
    replaced: tuple = ()
    dropped: tuple = ()
    u0_coefficients: tuple = field(default=())


def direct_sum_split(u_gens, b0, u0):
    u_gens = list(u_gens)
    _check_widths(u_gens + [u0])
    if not 0 <= b0 < u0.width:
        raise SpanError("bit {} outside width {}".format(b0, u0.width))
    if not u0[b0]:
        raise SpanError("bit {} of the split vector is 0".format(b0))
    coefficients = in_span(u0, u_gens)
    if coefficients is None:
        raise SpanError("split vector does not lie in the span of the generators")
    w_gens = []
    replaced = []
    dropped = []
    for i, gen in enumerate(u_gens):
        if gen[b0]:
            gen = gen + u0
            replaced.append(i)
        if gen.is_zero():
            dropped.append(i)
            continue
        w_gens.append(gen)
    cert = SplitCertificate(b0, tuple(replaced), tuple(dropped), tuple(coefficients))
    return w_gens, cert
