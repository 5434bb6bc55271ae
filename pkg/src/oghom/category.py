"""Small finite categories with explicit composition tables.

Used for the left-cancellative category of an ordered groupoid, for
quotient groupoids viewed as one-object-per-class categories, and as the
index shape for modules, colimits, and nerves.  Composition is written
diagrammatically: compose(m1, m2) means "m1 then m2" and is defined
exactly when cod(m1) = dom(m2).
"""

from .errors import NotComposable, StructuralDefect


class FiniteCategory:
    def __init__(self, objects, morphisms, dom, cod, identity, compose):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.dom = dict(dom)
        self.cod = dict(cod)
        self.identity = dict(identity)
        self._compose = dict(compose)
        problems = self.check()
        if problems:
            raise StructuralDefect("not a category: %s" % problems[0])

    def check(self):
        """Category axioms as a list of readable problems (empty = ok)."""
        out = []
        for o in self.objects:
            i = self.identity.get(o)
            if i is None or self.dom.get(i) != o or self.cod.get(i) != o:
                out.append("identity of %r is broken" % (o,))
        for m in self.morphisms:
            if self.dom[m] not in self.objects or self.cod[m] not in self.objects:
                out.append("morphism %r has unknown endpoints" % (m,))
        for m1 in self.morphisms:
            for m2 in self.morphisms:
                if self.cod[m1] == self.dom[m2]:
                    k = self._compose.get((m1, m2))
                    if k is None or k not in self.dom:
                        out.append("composite (%r, %r) missing" % (m1, m2))
                    elif self.dom[k] != self.dom[m1] or self.cod[k] != self.cod[m2]:
                        out.append("composite (%r, %r) mistyped" % (m1, m2))
                elif (m1, m2) in self._compose:
                    out.append("composite (%r, %r) defined illegally" % (m1, m2))
        if out:
            return out
        for m in self.morphisms:
            if self._compose[(self.identity[self.dom[m]], m)] != m:
                out.append("left unit fails at %r" % (m,))
            if self._compose[(m, self.identity[self.cod[m]])] != m:
                out.append("right unit fails at %r" % (m,))
        for m1 in self.morphisms:
            for m2 in self.morphisms:
                if self.cod[m1] != self.dom[m2]:
                    continue
                m12 = self._compose[(m1, m2)]
                for m3 in self.morphisms:
                    if self.cod[m2] != self.dom[m3]:
                        continue
                    if (self._compose[(m12, m3)]
                            != self._compose[(m1, self._compose[(m2, m3)])]):
                        out.append("associativity fails at (%r, %r, %r)"
                                   % (m1, m2, m3))
        return out

    def composable(self, m1, m2):
        return self.cod[m1] == self.dom[m2]

    def compose(self, m1, m2):
        if not self.composable(m1, m2):
            raise NotComposable("cod(%r) != dom(%r)" % (m1, m2))
        return self._compose[(m1, m2)]

    def is_identity(self, m):
        return self.identity.get(self.dom[m]) == m and self.dom[m] == self.cod[m]

    def nonidentity_morphisms(self):
        return [m for m in self.morphisms if not self.is_identity(m)]

    def left_cancellative(self):
        """(verdict, witness): witness is (m, h1, h2) with m h1 = m h2,
        h1 != h2 when cancellation fails."""
        by_dom = {}
        for h in self.morphisms:
            by_dom.setdefault(self.dom[h], []).append(h)
        for m in self.morphisms:
            outgoing = by_dom.get(self.cod[m], [])
            seen = {}
            for h in outgoing:
                k = self._compose[(m, h)]
                if k in seen and seen[k] != h:
                    return (False, (m, seen[k], h))
                seen[k] = h
        return (True, None)

    def components(self):
        """Object partition by zig-zags of morphisms."""
        parent = {o: o for o in self.objects}

        def find(o):
            while parent[o] != o:
                parent[o] = parent[parent[o]]
                o = parent[o]
            return o

        for m in self.morphisms:
            a, b = find(self.dom[m]), find(self.cod[m])
            if a != b:
                parent[a] = b
        groups = {}
        for o in self.objects:
            groups.setdefault(find(o), []).append(o)
        return list(groups.values())

    def full_subcategory(self, objs):
        objs = list(objs)
        oset = set(objs)
        morphs = [m for m in self.morphisms
                  if self.dom[m] in oset and self.cod[m] in oset]
        mset = set(morphs)
        comp = {k: v for k, v in self._compose.items()
                if k[0] in mset and k[1] in mset}
        return FiniteCategory(objs, morphs,
                              {m: self.dom[m] for m in morphs},
                              {m: self.cod[m] for m in morphs},
                              {o: self.identity[o] for o in objs},
                              comp)

    def __repr__(self):
        return "FiniteCategory(%d objects, %d morphisms)" % (
            len(self.objects), len(self.morphisms))


def groupoid_as_category(g0):
    """A groupoid's underlying category (objects = identities)."""
    comp = {}
    for g in g0.arrows:
        for h in g0.arrows:
            if g0.composable(g, h):
                comp[(g, h)] = g0.compose(g, h)
    return FiniteCategory(g0.identities, g0.arrows, dict(g0.d), dict(g0.r),
                          {e: e for e in g0.identities}, comp)


def group_category(m, names=None):
    """One-object category of the cyclic group Z/m.

    Morphism ids default to "t0" (identity), "t1", ..., "t{m-1}".
    """
    if names is None:
        names = ["t%d" % i for i in range(m)]
    obj = "*"
    comp = {(names[i], names[j]): names[(i + j) % m]
            for i in range(m) for j in range(m)}
    return FiniteCategory([obj], list(names),
                          {n: obj for n in names}, {n: obj for n in names},
                          {obj: names[0]}, comp)
