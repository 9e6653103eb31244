"""Term orderings on power products: lex, deglex, degrevlex, elimination, matrix.

Power products are plain tuples of non-negative integer exponents.  Every
ordering exposes a sort ``key`` such that sigma-greater power products get
larger keys; all comparisons reduce to tuple comparison of keys.
"""

from fractions import Fraction

LT, EQ, GT = -1, 0, 1


class TermOrdering:
    """Base class: a total, multiplicative ordering with 1 as minimum."""

    kind = None

    def __init__(self, n):
        self.n = n

    def key(self, pp):
        raise NotImplementedError

    def compare(self, t, s):
        """Three-way comparison of two power products."""
        if len(t) != self.n or len(s) != self.n:
            raise ValueError("power product arity does not match ordering arity")
        kt, ks = self.key(t), self.key(s)
        if kt < ks:
            return LT
        if kt > ks:
            return GT
        if t != s:
            raise ValueError("ordering matrix is rank deficient: tie on distinct terms")
        return EQ

    def greater(self, t, s):
        return self.key(t) > self.key(s)

    def sorted(self, pps, reverse=False):
        return sorted(pps, key=self.key, reverse=reverse)

    def max(self, pps):
        return max(pps, key=self.key)

    def min(self, pps):
        return min(pps, key=self.key)

    def canonical(self):
        """Hashable descriptor identifying this ordering (used as cache key)."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, TermOrdering) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "%s(n=%d)" % (type(self).__name__, self.n)


class Lex(TermOrdering):
    kind = "lex"

    def key(self, pp):
        return pp

    def canonical(self):
        return ("lex", self.n)


class DegLex(TermOrdering):
    kind = "deglex"

    def key(self, pp):
        return (sum(pp), pp)

    def canonical(self):
        return ("deglex", self.n)


class DegRevLex(TermOrdering):
    kind = "degrevlex"

    def key(self, pp):
        # degree first; ties broken so that the *last* nonzero entry of the
        # exponent difference being negative means "greater".
        return (sum(pp), tuple(-e for e in reversed(pp)))

    def canonical(self):
        return ("degrevlex", self.n)


class MatrixOrder(TermOrdering):
    """Ordering by a stack of exact rational (or integer) weight rows.

    The stacked rows must have rank n and give every indeterminate a
    positive first nonzero weight; both are validated on construction.
    """

    kind = "matrix"

    def __init__(self, rows, n=None):
        rows = tuple(tuple(Fraction(w) for w in row) for row in rows)
        if not rows:
            raise ValueError("matrix ordering needs at least one row")
        n = n if n is not None else len(rows[0])
        super().__init__(n)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix ordering rows must all have length %d" % n)
        self.rows = rows
        self._key_cache = {}
        self._validate()

    def _validate(self):
        for j in range(self.n):
            col = [row[j] for row in self.rows]
            first = next((w for w in col if w != 0), None)
            if first is None or first < 0:
                raise ValueError("indeterminate %d is not greater than 1" % j)
        if _rank(self.rows) < self.n:
            raise ValueError("ordering matrix is rank deficient")

    def key(self, pp):
        k = self._key_cache.get(pp)
        if k is None:
            k = tuple(sum(w * e for w, e in zip(row, pp) if e) for row in self.rows)
            self._key_cache[pp] = k
        return k

    def canonical(self):
        return ("matrix", self.n, self.rows)


def _rank(rows):
    m = [list(row) for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / pr[col]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def _degrevlex_rows(indices, n):
    """Weight rows realizing degrevlex restricted to the given indeterminates."""
    rows = [[1 if j in indices else 0 for j in range(n)]]
    for j in reversed(indices[1:]):
        rows.append([-1 if k == j else 0 for k in range(n)])
    return rows


class Elim(MatrixOrder):
    """Elimination ordering: total degree in the block dominates, ties broken
    by degrevlex on the complement and then by degrevlex within the block."""

    kind = "elim"

    def __init__(self, block, n):
        block = tuple(sorted(block))
        if not block or any(j < 0 or j >= n for j in block):
            raise ValueError("elimination block must be a non-empty subset of 0..n-1")
        rest = tuple(j for j in range(n) if j not in block)
        rows = [[1 if j in block else 0 for j in range(n)]]
        if rest:
            rows += _degrevlex_rows(list(rest), n)
        rows += _degrevlex_rows(list(block), n)[1:]
        self.block = block
        super().__init__(rows, n)

    def canonical(self):
        return ("elim", self.n, self.block)


def lex(n):
    return Lex(n)


def deglex(n):
    return DegLex(n)


def degrevlex(n):
    return DegRevLex(n)


def elim(block, n):
    return Elim(block, n)


def matrix_order(rows, n=None):
    return MatrixOrder(rows, n)
