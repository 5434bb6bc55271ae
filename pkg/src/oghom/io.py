"""JSON documents: validation, loading, canonical serialization.

Two top-level document kinds, both carrying "schema": 1.  A bare
groupoid document lists identities, non-identity arrows (d, r, inverse),
the non-identity composition table, and order generators; unit
compositions and the reflexive-transitive order closure are inferred.  A
workspace wraps a groupoid together with named modules; a module gives a
group per identity, a matrix per covering pair of the identity order
(keyed "e>f"), and a matrix per non-identity arrow.

Malformed input raises SchemaViolation (with a JSON pointer) or
DanglingReference; those are input errors.  Structurally bad but
well-formed data (axiom violations, non-functorial actions) surfaces
later as math errors from the constructors.
"""

import json

import jsonschema

from .errors import DanglingReference, SchemaViolation
from .gmodules import module_from_parts
from .groupoid import GroupoidCandidate
from .zmodule import FgAbGroup, ZMatrix

_MATRIX = {"type": "array",
           "items": {"type": "array", "items": {"type": "integer"}}}

_GROUP = {
    "oneOf": [
        {"type": "object",
         "required": ["rank"],
         "properties": {
             "rank": {"type": "integer", "minimum": 0},
             "torsion": {"type": "array",
                         "items": {"type": "integer", "minimum": 2}}},
         "additionalProperties": False},
        {"type": "object",
         "required": ["ngens", "relations"],
         "properties": {
             "ngens": {"type": "integer", "minimum": 0},
             "relations": _MATRIX},
         "additionalProperties": False},
    ]
}

_GROUPOID_CORE = {
    "type": "object",
    "required": ["identities", "arrows", "compose", "order"],
    "properties": {
        "schema": {"const": 1},
        "identities": {"type": "array", "minItems": 1,
                       "items": {"type": "string"}},
        "arrows": {"type": "array",
                   "items": {"type": "object",
                             "required": ["id", "d", "r", "inv"],
                             "properties": {"id": {"type": "string"},
                                            "d": {"type": "string"},
                                            "r": {"type": "string"},
                                            "inv": {"type": "string"}},
                             "additionalProperties": False}},
        "compose": {"type": "array",
                    "items": {"type": "array", "minItems": 3, "maxItems": 3,
                              "items": {"type": "string"}}},
        "order": {"type": "array",
                  "items": {"type": "array", "minItems": 2, "maxItems": 2,
                            "items": {"type": "string"}}},
    },
    "additionalProperties": False,
}

_MODULE = {
    "type": "object",
    "required": ["groups"],
    "properties": {
        "groups": {"type": "object", "additionalProperties": _GROUP},
        "poset_maps": {"type": "object", "additionalProperties": _MATRIX},
        "arrow_maps": {"type": "object", "additionalProperties": _MATRIX},
    },
    "additionalProperties": False,
}

_WORKSPACE = {
    "type": "object",
    "required": ["schema", "groupoid"],
    "properties": {
        "schema": {"const": 1},
        "groupoid": _GROUPOID_CORE,
        "modules": {"type": "object", "additionalProperties": _MODULE},
    },
    "additionalProperties": False,
}


def _pointer(error):
    return "/" + "/".join(str(p) for p in error.absolute_path)


def _check_schema(doc, schema):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: e.json_path)
    if errors:
        e = errors[0]
        raise SchemaViolation(_pointer(e), e.message)


def load_document(source):
    """Parse JSON from a path (str) or pass a dict through."""
    if isinstance(source, dict):
        return source
    try:
        with open(source) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaViolation("", "cannot read %s: %s" % (source, exc))
    except json.JSONDecodeError as exc:
        raise SchemaViolation("", "invalid JSON: %s" % exc)


def document_kind(doc):
    if not isinstance(doc, dict):
        raise SchemaViolation("", "top-level document must be an object")
    if doc.get("schema") != 1:
        raise SchemaViolation("/schema", "missing or unsupported version")
    if "groupoid" in doc:
        _check_schema(doc, _WORKSPACE)
        return "workspace"
    _check_schema(doc, _GROUPOID_CORE)
    return "groupoid"


def candidate_from_doc(gdoc, base=""):
    """Groupoid JSON object -> GroupoidCandidate, checking references."""
    identities = gdoc["identities"]
    seen = set()
    for i, e in enumerate(identities):
        if e in seen:
            raise SchemaViolation("%s/identities/%d" % (base, i),
                                  "duplicate id %r" % e)
        seen.add(e)
    arrows = {}
    for i, a in enumerate(gdoc["arrows"]):
        if a["id"] in seen:
            raise SchemaViolation("%s/arrows/%d/id" % (base, i),
                                  "duplicate id %r" % a["id"])
        seen.add(a["id"])
        arrows[a["id"]] = (a["d"], a["r"], a["inv"])
    idset = set(identities)
    for i, a in enumerate(gdoc["arrows"]):
        for field in ("d", "r"):
            if a[field] not in idset:
                raise DanglingReference(
                    "%s/arrows/%d/%s" % (base, i, field), a[field])
        if a["inv"] not in seen:
            raise DanglingReference("%s/arrows/%d/inv" % (base, i), a["inv"])
    compose = {}
    for i, (g, h, k) in enumerate(gdoc["compose"]):
        for j, ref in enumerate((g, h, k)):
            if ref not in seen:
                raise DanglingReference(
                    "%s/compose/%d/%d" % (base, i, j), ref)
        if (g, h) in compose and compose[(g, h)] != k:
            raise SchemaViolation("%s/compose/%d" % (base, i),
                                  "conflicting entries for (%s, %s)" % (g, h))
        compose[(g, h)] = k
    order = []
    for i, (lo, hi) in enumerate(gdoc["order"]):
        for j, ref in enumerate((lo, hi)):
            if ref not in seen:
                raise DanglingReference("%s/order/%d/%d" % (base, i, j), ref)
        order.append((lo, hi))
    return GroupoidCandidate.from_parts(identities, arrows, compose, order)


def group_from_spec(spec):
    if "rank" in spec:
        return FgAbGroup.from_invariants(spec["rank"],
                                         spec.get("torsion", []))
    rels = spec["relations"]
    ngens = spec["ngens"]
    for row in rels:
        if len(row) != len(rels[0]):
            raise SchemaViolation("", "ragged relation matrix")
    if rels and len(rels) != ngens:
        raise SchemaViolation("", "relations must have ngens rows")
    if not rels:
        return FgAbGroup(ngens, None)
    return FgAbGroup(ngens, ZMatrix(rels))


def _matrix_from_doc(rows, nrows, ncols, pointer):
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise SchemaViolation(
            pointer, "expected a %dx%d matrix" % (nrows, ncols))
    return ZMatrix(rows, ncols=ncols)


def module_parts_from_doc(g0, mdoc, base=""):
    """Module JSON -> (groups, poset_maps, arrow_maps) over g0."""
    idset = set(g0.identities)
    groups = {}
    for e, spec in mdoc["groups"].items():
        if e not in idset:
            raise DanglingReference("%s/groups/%s" % (base, e), e)
        try:
            groups[e] = group_from_spec(spec)
        except SchemaViolation as exc:
            raise SchemaViolation("%s/groups/%s" % (base, e), exc.message)
    for e in g0.identities:
        if e not in groups:
            raise SchemaViolation("%s/groups" % base,
                                  "missing group for identity %r" % e)

    covers = {(hi, lo) for (lo, hi) in g0.identity_poset.covers()}
    poset_maps = {}
    for key, rows in mdoc.get("poset_maps", {}).items():
        if ">" not in key:
            raise SchemaViolation("%s/poset_maps/%s" % (base, key),
                                  "key must look like upper>lower")
        hi, lo = key.split(">", 1)
        for ref in (hi, lo):
            if ref not in idset:
                raise DanglingReference(
                    "%s/poset_maps/%s" % (base, key), ref)
        if (hi, lo) not in covers:
            raise SchemaViolation(
                "%s/poset_maps/%s" % (base, key),
                "%r does not cover %r in the identity order" % (hi, lo))
        poset_maps[(hi, lo)] = _matrix_from_doc(
            rows, groups[lo].ngens, groups[hi].ngens,
            "%s/poset_maps/%s" % (base, key))
    for (hi, lo) in covers:
        if (hi, lo) not in poset_maps:
            raise SchemaViolation(
                "%s/poset_maps" % base,
                "missing map for covering pair %s>%s" % (hi, lo))

    nonid = set(g0.nonidentity_arrows())
    arrow_maps = {}
    for g, rows in mdoc.get("arrow_maps", {}).items():
        if g not in nonid:
            raise DanglingReference("%s/arrow_maps/%s" % (base, g), g)
        arrow_maps[g] = _matrix_from_doc(
            rows, groups[g0.r[g]].ngens, groups[g0.d[g]].ngens,
            "%s/arrow_maps/%s" % (base, g))
    for g in sorted(nonid):
        if g not in arrow_maps:
            raise SchemaViolation("%s/arrow_maps" % base,
                                  "missing map for arrow %r" % g)
    return groups, poset_maps, arrow_maps


def build_module(g0, lc, mdoc, base=""):
    groups, poset_maps, arrow_maps = module_parts_from_doc(g0, mdoc, base)
    return module_from_parts(lc, groups, poset_maps, arrow_maps)


def load(source):
    """Load a document -> (kind, candidate, {module name: module doc})."""
    doc = load_document(source)
    kind = document_kind(doc)
    if kind == "groupoid":
        return kind, candidate_from_doc(doc), {}
    cand = candidate_from_doc(doc["groupoid"], base="/groupoid")
    return kind, cand, dict(doc.get("modules", {}))


def groupoid_to_doc(g0):
    """Canonical groupoid document: sorted, closures spelled out."""
    arrows = [{"id": g, "d": g0.d[g], "r": g0.r[g], "inv": g0.inv[g]}
              for g in g0.nonidentity_arrows()]
    nonid = set(g0.nonidentity_arrows())
    compose = sorted([g, h, k]
                     for (g, h), k in g0.composition_table().items()
                     if g in nonid and h in nonid)
    order = sorted([lo, hi] for (lo, hi) in g0.order.pairs() if lo != hi)
    return {"schema": 1,
            "identities": sorted(g0.identities),
            "arrows": sorted(arrows, key=lambda a: a["id"]),
            "compose": compose,
            "order": order}


def dumps(doc):
    """Canonical text form: stable key order, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def quotient_to_doc(q):
    return {"classes": {cid: list(members)
                        for cid, members in sorted(q.classes.items())},
            "groupoid": groupoid_to_doc(q.groupoid)}


def lcat_to_doc(lc):
    cat = lc.category
    morphisms = []
    for (e, g) in sorted(cat.morphisms):
        morphisms.append({"object": e, "arrow": g,
                          "dom": cat.dom[(e, g)], "cod": cat.cod[(e, g)]})
    return {"objects": list(cat.objects), "morphisms": morphisms}


def group_to_doc(group):
    rank, torsion = group.canonical_form()
    return {"rank": rank, "torsion": list(torsion)}


def module_to_doc(g0, module):
    """Module -> loadable parts document, presentations preserved."""
    groups = {}
    for e in g0.identities:
        g = module.groups[e]
        groups[e] = {"ngens": g.ngens, "relations": g.relations.to_lists()}
    poset_maps = {}
    for (lo, hi) in g0.identity_poset.covers():
        poset_maps["%s>%s" % (hi, lo)] = (
            module.action[(hi, lo)].matrix.to_lists())
    arrow_maps = {}
    for g in g0.nonidentity_arrows():
        arrow_maps[g] = module.action[(g0.d[g], g)].matrix.to_lists()
    return {"groups": groups, "poset_maps": poset_maps,
            "arrow_maps": arrow_maps}
