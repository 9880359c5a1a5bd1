"""Brute-force checks kept independent of the library's own linear algebra and group code."""
from itertools import permutations


def span_rank(vectors, F):
    """Rank by plain Gaussian elimination, kept separate from the library's linear algebra."""
    rows = [list(v) for v in vectors if any(x != 0 for x in v)]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def all_bracketings(A, n):
    """Every product of n basis elements under every bracketing."""
    if n == 1:
        return [A.basis_vector(i) for i in range(A.dim)]
    out = []
    for k in range(1, n):
        for u in all_bracketings(A, k):
            for v in all_bracketings(A, n - k):
                out.append(A.mul(u, v))
    return out


def compose_perms(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def dihedral_group_of_square():
    r, s = (1, 2, 3, 0), (0, 3, 2, 1)
    els = {(0, 1, 2, 3)}
    frontier = list(els)
    while frontier:
        x = frontier.pop()
        for g in (r, s):
            y = compose_perms(x, g)
            if y not in els:
                els.add(y)
                frontier.append(y)
    return els


def find_isomorphism(G_elements, mul, gens, H_elements, hmul):
    """Brute-force search for a homomorphism bijection sending gens to some pair in H."""
    G_elements = list(G_elements)
    for images in permutations(H_elements, len(gens)):
        phi = {gens[0].group.identity(): (0, 1, 2, 3)}
        frontier = [gens[0].group.identity()]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, h in zip(gens, images):
                y = mul(x, g)
                img = hmul(phi[x], h)
                if y in phi:
                    ok = phi[y] == img
                    if not ok:
                        break
                else:
                    phi[y] = img
                    frontier.append(y)
        if ok and len(phi) == len(G_elements) and len(set(phi.values())) == len(H_elements):
            if all(phi[mul(x, y)] == hmul(phi[x], phi[y]) for x in G_elements for y in G_elements):
                return phi
    return None
