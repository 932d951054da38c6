"""Symmetric-group combinatorics and Schur functors on super vector spaces.

Partitions index the irreducible representations of S_n; the central block
idempotent attached to a partition acts on n-th tensor powers (with Koszul
signs in the super case), and Schur-finiteness asks for a partition whose
functor kills the space.  Characters come from the Murnaghan-Nakayama rule
with the hook length formula as a cross-check; Schur dimensions have the
supersymmetric hook Schur evaluation as an independent oracle.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import InvariantError, CapExceededError
from .exactlin import QMatrix, matrix_rank

CHARACTER_CAP = 8


def check_partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise InvariantError("partition parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvariantError("partition parts must be weakly decreasing")
    return parts


class Partition:
    def __init__(self, parts):
        self.parts = check_partition(parts)
        self.weight = sum(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition%s" % (self.parts,)


def partitions_of(n):
    """All partitions of n, largest part first, in lexicographic order."""
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, n, [])
    return out


def hook_lengths(parts):
    conj = conjugate(parts)
    return [[parts[i] - j + conj[j] - i - 1 for j in range(parts[i])]
            for i in range(len(parts))]


def conjugate(parts):
    if not parts:
        return ()
    out = []
    for j in range(parts[0]):
        out.append(sum(1 for p in parts if p > j))
    return tuple(out)


def standard_tableau_count(parts):
    """f^lambda by the hook length formula."""
    n = sum(parts)
    prod = 1
    for row in hook_lengths(parts):
        for h in row:
            prod *= h
    return factorial(n) // prod


@lru_cache(maxsize=None)
def _mn_character(parts, cycle_type):
    """Murnaghan-Nakayama: chi_lambda at a given cycle type (both tuples).

    Recursion removes a rim hook of the first cycle length in every valid
    way; a hook spanning rows start..end takes row i to parts[i+1] - 1 for
    start <= i < end and row end to parts[start] - k + (end - start), and is
    valid iff the result is again a partition shape.
    """
    if not parts:
        return 1 if not cycle_type else 0
    if not cycle_type:
        return 0
    k = cycle_type[0]
    rest = cycle_type[1:]
    total = 0
    rows = len(parts)
    for start in range(rows):
        for end in range(start, rows):
            new = list(parts)
            for i in range(start, end):
                new[i] = parts[i + 1] - 1
            new[end] = parts[start] - k + (end - start)
            if new[end] < 0 or new[end] > parts[end] - 1:
                continue
            if any(new[i] < new[i + 1] for i in range(len(new) - 1)):
                continue
            trimmed = tuple(p for p in new if p > 0)
            total += (-1) ** (end - start) * _mn_character(trimmed, rest)
    return total


def character_table_row(partition, cap=CHARACTER_CAP):
    """chi_lambda on all cycle types of S_n, as {cycle_type: integer}.

    The identity value is cross-checked against the hook length formula.
    """
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    n = sum(parts)
    if n > cap:
        raise CapExceededError("character cap is n <= %d" % cap, needed=n,
                               cap=cap)
    row = {}
    for ct in partitions_of(n):
        row[ct] = _mn_character(parts, ct)
    ident = tuple([1] * n)
    if row[ident] != standard_tableau_count(parts):
        raise InvariantError("Murnaghan-Nakayama disagrees with the hook "
                             "length formula (internal bug)")
    return row


def cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        l = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        lens.append(l)
    lens.sort(reverse=True)
    return tuple(lens)


def compose_perm(p, q):
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class GroupAlgebraElement:
    """Sparse element of Q[S_n]: permutation tuple -> coefficient."""

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = {p: Fraction(c) for p, c in coeffs.items() if c}
        for p in self.coeffs:
            if len(p) != n or sorted(p) != list(range(n)):
                raise InvariantError("not a permutation of %d letters" % n)

    def __mul__(self, other):
        out = {}
        for p, c in self.coeffs.items():
            for q, d in other.coeffs.items():
                r = compose_perm(p, q)
                s = out.get(r, 0) + c * d
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return GroupAlgebraElement(self.n, out)

    def __add__(self, other):
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return GroupAlgebraElement(self.n, out)

    def scale(self, c):
        return GroupAlgebraElement(self.n, {p: c * v
                                            for p, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "GroupAlgebraElement(S_%d, %d terms)" % (self.n,
                                                        len(self.coeffs))


def central_idempotent(partition, cap=CHARACTER_CAP, verify=None):
    """The central block idempotent

        c_lambda = (f^lambda / n!) sum_sigma chi_lambda(sigma^(-1)) sigma.

    Idempotency and centrality are verified at construction for n <= 5
    (and on request above).
    """
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    n = sum(parts)
    if n > cap:
        raise CapExceededError("idempotent cap is n <= %d" % cap, needed=n,
                               cap=cap)
    row = character_table_row(parts, cap)
    f = standard_tableau_count(parts)
    coeffs = {}
    for sigma in permutations(range(n)):
        chi = row[cycle_type(invert_perm(sigma))]
        if chi:
            coeffs[sigma] = Fraction(f * chi, factorial(n))
    c = GroupAlgebraElement(n, coeffs)
    if verify is None:
        verify = n <= 5
    if verify:
        if c * c != c:
            raise InvariantError("central idempotent failed c^2 = c")
        for k in range(n - 1):
            t = list(range(n))
            t[k], t[k + 1] = t[k + 1], t[k]
            t = tuple(t)
            tau = GroupAlgebraElement(n, {t: 1})
            if tau * c != c * tau:
                raise InvariantError("idempotent is not central")
    return c


def young_symmetrizer(partition):
    """The classical (non-central) Young symmetrizer of the canonical
    tableau, normalized to an idempotent: a secondary route to the same
    Schur functors."""
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    n = sum(parts)
    rows = []
    k = 0
    for p in parts:
        rows.append(list(range(k, k + p)))
        k += p
    cols = []
    for j in range(parts[0]):
        col = [row[j] for row in rows if j < len(row)]
        cols.append(col)

    def group_of(blocks):
        perms = [tuple(range(n))]
        for block in blocks:
            new = []
            for block_perm in permutations(block):
                mapping = list(range(n))
                for a, b in zip(block, block_perm):
                    mapping[a] = b
                new.append(tuple(mapping))
            perms = [compose_perm(p, q) for p in perms for q in new]
        return perms

    def perm_sign(p):
        sign = 1
        seen = [False] * len(p)
        for i in range(len(p)):
            if seen[i]:
                continue
            l = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                l += 1
            if l % 2 == 0:
                sign = -sign
        return sign

    row_sum = GroupAlgebraElement(
        n, {p: 1 for p in group_of(rows)})
    col_sum = GroupAlgebraElement(
        n, {p: perm_sign(p) for p in group_of(cols)})
    y = row_sum * col_sum
    # y^2 = (n!/f) y, so scale to an idempotent
    f = standard_tableau_count(parts)
    return y.scale(Fraction(f, factorial(n)))


# ---------------------------------------------------------------------------
# tensor power actions with Koszul signs

TENSOR_CAP = 50000


def tensor_power_action(v, n, perm, cap=TENSOR_CAP):
    """The signed permutation matrix of perm acting on v^(x n).

    perm moves the factor in position i to position perm(i); the Koszul
    sign collects (-1) for every pair of odd factors whose order flips.
    """
    t = v.total
    if t ** n > cap:
        raise CapExceededError("tensor power dimension %d exceeds cap %d"
                               % (t ** n, cap), needed=t ** n, cap=cap)
    entries = {}
    for code in range(t ** n):
        idx = []
        c = code
        for _ in range(n):
            idx.append(c % t)
            c //= t
        idx.reverse()
        # target: factor at position i goes to position perm[i]
        out = [0] * n
        for i in range(n):
            out[perm[i]] = idx[i]
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j] and v.parity(idx[i]) and v.parity(idx[j]):
                    sign = -sign
        tgt = 0
        for k in out:
            tgt = tgt * t + k
        entries[(tgt, code)] = sign
    return QMatrix(t ** n, t ** n, entries)


def group_element_action(v, elem, cap=TENSOR_CAP):
    t = v.total
    n = elem.n
    acc = QMatrix.zero(t ** n, t ** n)
    for p, c in elem.coeffs.items():
        acc = acc + tensor_power_action(v, n, p, cap).scale(c)
    return acc


def _super_trace_of_permutation(v, perm):
    """Trace of the signed permutation action: product over cycles of
    (d+ + (-1)^(l+1) d-)."""
    total = 1
    for l in cycle_type(perm):
        total *= v.even + ((-1) ** (l + 1)) * v.odd
    return total


def schur_dimension(partition, v, cap=TENSOR_CAP, force_matrix=False):
    """dim S_lambda(v) computed from the idempotent action on v^(x n).

    The action of a central idempotent is an idempotent matrix, so in
    characteristic zero its rank equals its trace; the trace expands over
    cycle types without building the matrix.  Small instances are done by
    honest rank computation (always when force_matrix is set).
    """
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    n = sum(parts)
    c = central_idempotent(parts)
    t = v.total
    if force_matrix or t ** n <= 512:
        if t ** n > cap:
            raise CapExceededError("tensor power exceeds cap", needed=t ** n,
                                   cap=cap)
        return matrix_rank(group_element_action(v, c, cap))
    val = sum(coeff * _super_trace_of_permutation(v, p)
              for p, coeff in c.coeffs.items())
    if val != int(val):
        raise InvariantError("projector trace is not an integer")
    return int(val)


def super_schur_value(partition, v):
    """Independent oracle: f^lambda * hs_lambda(1^d+ | 1^d-) via the
    Jacobi-Trudi determinant in the complete supersymmetric functions."""
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    a, b = v.even, v.odd

    def comb(m, k):
        if k < 0:
            return 0
        if k == 0:
            return 1
        if m < 0:
            return 0
        out = 1
        for i in range(k):
            out = out * (m - i) // (i + 1)
        return out

    def h_super(k):
        if k < 0:
            return 0
        if k == 0:
            return 1
        return sum(comb(a - 1 + i, i) * comb(b, k - i) for i in range(k + 1))

    l = len(parts)
    m = QMatrix(l, l, {(i, j): h_super(parts[i] - i + j)
                       for i in range(l) for j in range(l)})
    # exact integer determinant by expansion on the small matrices used here
    def det(mat, rows, cols):
        if not rows:
            return 1
        total = 0
        r = rows[0]
        for k, c in enumerate(cols):
            v0 = mat.entries.get((r, c), 0)
            if v0:
                sub = det(mat, rows[1:], cols[:k] + cols[k + 1:])
                total += (-1) ** k * v0 * sub
        return total

    value = det(m, list(range(l)), list(range(l)))
    return standard_tableau_count(parts) * value


def rectangle_criterion(partition, v):
    """True iff S_lambda(v) = 0 by the hook criterion: lambda_(d+ + 1) >= d- + 1."""
    parts = partition.parts if isinstance(partition, Partition) \
        else check_partition(partition)
    a, b = v.even, v.odd
    return len(parts) > a and parts[a] >= b + 1


def is_schur_finite(v, search_cap=12):
    """A minimal-weight annihilating partition, if one exists within the cap.

    For honest super spaces one always exists; the rectangle criterion is a
    cross-check oracle, never the returned evidence (each candidate's Schur
    dimension is computed).
    """
    for n in range(1, search_cap + 1):
        for parts in partitions_of(n):
            if schur_dimension(parts, v) == 0:
                if not rectangle_criterion(parts, v):
                    raise InvariantError("vanishing disagrees with the hook "
                                         "criterion (internal bug)")
                return Partition(parts)
    raise CapExceededError("no annihilating partition of weight <= %d found"
                           % search_cap, needed=None, cap=search_cap)
