"""Independent reference implementations used only to cross-check fast paths.

Each oracle deliberately avoids the code path it checks: slice laws come
from interval-set intersections and inclusion-exclusion instead of the
breakpoint sweep, transforms from the quadratic definition instead of the
butterfly, maximum families from unpruned enumeration instead of branch and
bound, and small LP optima from feasible-vertex enumeration instead of the
simplex.
"""

from fractions import Fraction
from itertools import combinations

from sumint.fourier import BooleanFunction
from sumint.families import SetFamily, is_valid_family, pattern_vertices
from sumint.intervals import IntervalSet
from sumint.slices import inclusion_region, intset


def region_intersection(T) -> IntervalSet:
    region = IntervalSet.full()
    for x in intset(T):
        region = region & inclusion_region(x)
    return region


def joint_prob_by_intervals(T) -> Fraction:
    """P[slice keeps all of T] as a pure interval-set computation."""
    return region_intersection(T).measure()


def level_probs_by_inclusion_exclusion(S):
    """Slice-size law via inclusion-exclusion over joint inclusions.

    Exponential in |S|; usable for |S| <= 4 or so.
    """
    S = intset(S)
    k = len(S)
    joint = {(): Fraction(1)}
    for r in range(1, k + 1):
        for T in combinations(S, r):
            joint[T] = joint_prob_by_intervals(T)
    probs = [Fraction(0)] * (k + 1)
    for r in range(k + 1):
        for U in combinations(S, r):
            inside = set(U)
            exact = Fraction(0)
            for extra in range(k - r + 1):
                for V in combinations([x for x in S if x not in inside], extra):
                    exact += (-1) ** extra * joint[tuple(sorted(inside | set(V)))]
            probs[r] += exact
    return tuple(probs)


def wht_by_definition(f: BooleanFunction) -> BooleanFunction:
    """Quadratic-time transform straight from the signed-expectation formula."""
    size = 1 << f.n
    vals = []
    for lam in range(size):
        total = Fraction(0)
        for x in range(size):
            sign = -1 if bin(lam & x).count("1") % 2 else 1
            total += sign * f.values[x]
        vals.append(total / size)
    return BooleanFunction(f.n, tuple(vals))


def max_family_by_subfamily_enumeration(n, pred) -> int:
    """Check every subfamily of qualifying sets; only sane for n <= 4."""
    verts = pattern_vertices(n, pred)
    best = 0
    for pick in range(1 << len(verts)):
        members = frozenset(verts[i] for i in range(len(verts)) if pick >> i & 1)
        if len(members) > best and is_valid_family(SetFamily(n, members), pred):
            best = len(members)
    return best


def lp_max_c0_by_vertex_enumeration(rows, rhs):
    """Exact max of x_0 over {x in Q^2 : rows . x <= rhs} via vertex enumeration.

    Assumes the optimum is attained at an intersection of two constraints;
    returns None if no feasible vertex exists.  Only used on pools where the
    search LP is known to be bounded and two-dimensional.
    """
    best = None
    m = len(rows)
    for i in range(m):
        for j in range(i + 1, m):
            (a, b), (c, d) = rows[i], rows[j]
            det = a * d - b * c
            if det == 0:
                continue
            x0 = (rhs[i] * d - b * rhs[j]) / det
            x1 = (a * rhs[j] - rhs[i] * c) / det
            if all(r0 * x0 + r1 * x1 <= t for (r0, r1), t in zip(rows, rhs)):
                if best is None or x0 > best:
                    best = x0
    return best
