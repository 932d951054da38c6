"""Description-file ingestion.

Input files are JSON documents with a top-level "kind" field: "quiver",
"structure_constants", or "category_presentation".  Every rational number
is written as a string "p/q" (or "p"), so ingestion is bit-exact; nothing
is ever parsed through floating point.
"""

import json
from fractions import Fraction

from .errors import ParseInputError
from .algebras import Quiver, path_algebra, structure_algebra
from .categories import PresentedCategory, TensorInvertible


def _frac(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseInputError("bad rational %r: %s" % (s, exc))


def _frac_vec(d):
    return {int(k): _frac(v) for k, v in d.items()}


def load_document(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseInputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise ParseInputError("%s is not valid JSON: %s" % (path, exc))
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseInputError("document needs a top-level 'kind' field")
    return doc


def load_algebra(path):
    doc = load_document(path)
    kind = doc["kind"]
    if kind == "quiver":
        return _algebra_from_quiver(doc)
    if kind == "structure_constants":
        return _algebra_from_constants(doc)
    raise ParseInputError("kind %r is not an algebra description" % kind)


def _algebra_from_quiver(doc):
    try:
        vertices = [str(v) for v in doc["vertices"]]
        arrows = [(str(n), str(s), str(t)) for n, s, t in doc.get("arrows", [])]
        truncation = int(doc["truncation"])
        relations = []
        for rel in doc.get("relations", []):
            relations.append([(_frac(c), [str(a) for a in names])
                              for c, names in rel])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseInputError("malformed quiver description: %s" % exc)
    quiver = Quiver(vertices, arrows)
    return path_algebra(quiver, relations, truncation,
                        name=doc.get("name", "quiver algebra"))


def _algebra_from_constants(doc):
    try:
        basis = [str(b) for b in doc["basis"]]
        unit = {str(k): _frac(v) for k, v in doc["unit"].items()}
        products = []
        for left, right, value in doc.get("products", []):
            products.append((str(left), str(right),
                             {str(k): _frac(v) for k, v in value.items()}))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseInputError("malformed structure-constant description: %s"
                              % exc)
    return structure_algebra(doc.get("name", "algebra"), basis, unit,
                             products)


def load_category(path):
    """Returns (category, invertible or None)."""
    doc = load_document(path)
    if doc["kind"] != "category_presentation":
        raise ParseInputError("kind %r is not a category presentation"
                              % doc["kind"])
    try:
        objects = [str(o) for o in doc["objects"]]
        unit = str(doc["unit"])
        hom = {}
        for key, d in doc["hom"].items():
            x, y = key.split("|")
            hom[(x, y)] = int(d)
        comp = {}
        for x, y, z, gi, fi, vec in doc.get("composition", []):
            comp.setdefault((str(x), str(y), str(z)), {})[
                (int(gi), int(fi))] = _frac_vec(vec)
        ident = {str(x): _frac_vec(v) for x, v in doc["identities"].items()}
        tensor_obj = {}
        for x, y, z in doc.get("tensor_objects", []):
            tensor_obj[(str(x), str(y))] = str(z)
        tensor_mor = {}
        for x1, y1, x2, y2, fi, gi, vec in doc.get("tensor_morphisms", []):
            tensor_mor.setdefault(
                (str(x1), str(y1), str(x2), str(y2)), {})[
                    (int(fi), int(gi))] = _frac_vec(vec)
        symmetry = {}
        for x, y, vec in doc.get("symmetry", []):
            symmetry[(str(x), str(y))] = _frac_vec(vec)
        traces = {str(x): _frac_vec(v)
                  for x, v in doc.get("traces", {}).items()}
        grading = {str(x): v for x, v in doc.get("grading", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseInputError("malformed category presentation: %s" % exc)
    cat = PresentedCategory(objects, hom, comp, ident, unit, tensor_obj,
                            tensor_mor, symmetry, traces, grading,
                            name=doc.get("name", "category"))
    inv = None
    if "invertible" in doc:
        decl = doc["invertible"]
        try:
            inv = TensorInvertible(
                cat, str(decl["object"]), str(decl["inverse"]),
                int(decl["bound"]),
                restrict_to=[str(o) for o in decl["restrict_to"]]
                if "restrict_to" in decl else None)
        except KeyError as exc:
            raise ParseInputError("invertible declaration missing %s" % exc)
    return cat, inv
