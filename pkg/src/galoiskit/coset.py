"""Felsch-style Todd-Coxeter enumeration of the cosets of the trivial subgroup.

Words are tuples of symbols; generator ``g`` is symbol ``2*g`` and its
inverse is ``2*g + 1`` (so ``s ^ 1`` inverts a symbol).
"""

from __future__ import annotations


class CosetLimitExceeded(RuntimeError):
    pass


def invert_word(word):
    return tuple(s ^ 1 for s in reversed(word))


def reduce_word(word):
    """Free and cyclic reduction."""
    out: list[int] = []
    for s in word:
        if out and out[-1] == s ^ 1:
            out.pop()
        else:
            out.append(s)
    while len(out) > 1 and out[0] == out[-1] ^ 1:
        out = out[1:-1]
    return tuple(out)


class _Enumeration:
    def __init__(self, n_gens: int, relators, limit: int):
        self.ncols = 2 * n_gens
        self.limit = limit
        self.table = [[-1] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.deductions: list[tuple[int, int]] = []
        rels = {reduce_word(r) for r in relators}
        rels.discard(())
        self.relators = sorted(rels)
        by_first: dict[int, set] = {s: set() for s in range(self.ncols)}
        for r in self.relators:
            for w in (r, invert_word(r)):
                for i in range(len(w)):
                    rot = w[i:] + w[:i]
                    by_first[rot[0]].add(rot)
        self.by_first = {s: sorted(v) for s, v in by_first.items()}

    def rep(self, c):
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def alive(self, c):
        return self.parent[c] == c

    def define(self, c, x):
        if self.live >= self.limit:
            raise CosetLimitExceeded(self.limit)
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        self.deductions.append((c, x))

    def _merge(self, k, l, queue):
        a, b = self.rep(k), self.rep(l)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a, b):
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                dest = table[g][x]
                if dest < 0:
                    continue
                table[g][x] = -1
                if table[dest][x ^ 1] == g:
                    table[dest][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(dest)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu
                    self.deductions.append((mu, x))

    def scan(self, c, word):
        """Scan ``word`` at ``c``; deduce a single missing entry or record a coincidence."""
        table = self.table
        n = len(word)
        f, i = c, 0
        while i < n:
            nxt = table[f][word[i]]
            if nxt < 0:
                break
            f, i = nxt, i + 1
        if i == n:
            if f != c:
                self.coincidence(f, c)
            return
        b, j = c, n - 1
        while j >= i:
            prv = table[b][word[j] ^ 1]
            if prv < 0:
                break
            b, j = prv, j - 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            table[f][word[i]] = b
            table[b][word[i] ^ 1] = f
            self.deductions.append((f, word[i]))

    def process_deductions(self):
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for w in self.by_first[x]:
                if not self.alive(c):
                    break
                self.scan(c, w)
            if not self.alive(c):
                continue
            d = self.table[c][x]
            if d >= 0 and self.alive(d):
                for w in self.by_first[x ^ 1]:
                    if not self.alive(d):
                        break
                    self.scan(d, w)

    def fill(self):
        c = 0
        while c < len(self.table):
            for x in range(self.ncols):
                if not self.alive(c):
                    break
                if self.table[c][x] < 0:
                    self.define(c, x)
                    self.process_deductions()
            c += 1

    def verify(self) -> bool:
        """Trace every relator at every live coset; repair and report whether anything changed."""
        changed = False
        for c in range(len(self.table)):
            for r in self.relators:
                if not self.alive(c):
                    break
                f = c
                for s in r:
                    f = self.table[f][s]
                    if f < 0:
                        break
                if f < 0:
                    changed = True
                    self.scan(c, r)
                elif f != c:
                    changed = True
                    self.coincidence(f, c)
                self.process_deductions()
        return changed

    def run(self):
        self.fill()
        while self.verify():
            self.fill()
        live = [c for c in range(len(self.table)) if self.alive(c)]
        index = {c: i for i, c in enumerate(live)}
        return [[index[self.table[c][x]] for x in range(self.ncols)] for c in live]


def enumerate_cosets(n_gens: int, relators, limit: int) -> list[list[int]]:
    """Complete coset table of the trivial subgroup of ``<gens | relators>``.

    Row ``i`` is coset ``i`` (row 0 is the subgroup itself); column ``s`` is
    the action of symbol ``s``. Raises CosetLimitExceeded if more than
    ``limit`` live cosets are ever needed.
    """
    return _Enumeration(n_gens, relators, limit).run()
