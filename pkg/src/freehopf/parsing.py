"""Text and JSON forms for elements, tensors, spans, and map families.

Element grammar (whitespace is free between tokens):

    element := [sign] term (('+' | '-') term)*
    term    := coeff | coeff '*' word | word
    coeff   := int | int '/' int
    word    := '1' | gen ('*' gen)*
    gen     := 'x[' int ',' int ';' int ']'

The canonical printer in hopf.Element emits this grammar, so printing and
parsing round-trip.
"""

from fractions import Fraction

from .words import UNIT, letter


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def done(self):
        self.skip()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError("expected %r" % ch, self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


def _parse_gen(cur, H):
    at = cur.pos
    cur.take("x")
    cur.take("[")
    i = cur.integer()
    cur.take(",")
    j = cur.integer()
    cur.take(";")
    r = cur.integer()
    cur.take("]")
    try:
        return letter(H.n, H.domain, i, j, r)
    except ValueError as exc:
        raise ParseError(str(exc), at)


def _parse_word(cur, H):
    ch = cur.peek()
    if ch.isdigit():
        at = cur.pos
        value = cur.integer()
        if value != 1:
            raise ParseError("expected a generator or the unit word 1", at)
        return UNIT
    letters = [_parse_gen(cur, H)]
    while True:
        mark = cur.pos
        if cur.peek() != "*":
            break
        cur.pos += 1
        if cur.peek() != "x":
            cur.pos = mark
            break
        letters.append(_parse_gen(cur, H))
    return tuple(letters)


def _parse_term(cur, H):
    ch = cur.peek()
    if ch.isdigit():
        num = cur.integer()
        coeff = Fraction(num)
        if cur.peek() == "/":
            cur.pos += 1
            at = cur.pos
            den = cur.integer()
            if den == 0:
                raise ParseError("zero denominator", at)
            coeff = Fraction(num, den)
        if cur.peek() == "*":
            cur.pos += 1
            word = _parse_word(cur, H)
        else:
            word = UNIT
        return word, coeff
    if ch == "x":
        return _parse_word(cur, H), Fraction(1)
    raise ParseError("expected a term", cur.pos)


def parse_element(text, H):
    """Parse the element grammar into a normal-formed Element of H."""
    cur = _Cursor(text)
    if cur.done():
        raise ParseError("empty input", 0)
    terms = []
    sign = 1
    ch = cur.peek()
    if ch in "+-":
        sign = -1 if ch == "-" else 1
        cur.pos += 1
    while True:
        word, coeff = _parse_term(cur, H)
        terms.append((word, H.field.scalar(sign * coeff)))
        if cur.done():
            break
        ch = cur.peek()
        if ch not in "+-":
            raise ParseError("expected '+', '-', or end of input", cur.pos)
        sign = -1 if ch == "-" else 1
        cur.pos += 1
    return H.element(terms)


# -- JSON object forms ---------------------------------------------------------


def _terms_to_obj(el):
    return [
        {"c": str(c), "w": [list(l) for l in w]}
        for w, c in el.sorted_terms()
    ]


def element_to_obj(el):
    H = el.parent
    return {
        "field": H.field.token,
        "variant": H.variant,
        "n": H.n,
        "terms": _terms_to_obj(el),
    }


def _check_config(H, obj):
    for key, mine in (("field", H.field.token), ("variant", H.variant), ("n", H.n)):
        if key in obj and obj[key] != mine:
            raise ValueError(
                "config mismatch: document has %s=%r, algebra has %r"
                % (key, obj[key], mine)
            )


def _terms_from_obj(H, items):
    out = []
    for t in items:
        w = tuple(tuple(int(v) for v in l) for l in t["w"])
        out.append((w, H.field.scalar(str(t["c"]))))
    return out


def element_from_obj(H, obj):
    _check_config(H, obj)
    return H.element(_terms_from_obj(H, obj["terms"]))


def tensor_to_obj(t):
    H = t.parent
    return {
        "field": H.field.token,
        "variant": H.variant,
        "n": H.n,
        "terms": [
            {
                "c": str(c),
                "left": [list(l) for l in a],
                "right": [list(l) for l in b],
            }
            for (a, b), c in t.sorted_terms()
        ],
    }


def span_from_obj(H, obj):
    """Elements of a span document: {"elements": [termlist, ...]} plus the
    optional config keys field/variant/n, which must match H when present."""
    _check_config(H, obj)
    return [H.element(_terms_from_obj(H, items)) for items in obj["elements"]]


def images_from_obj(H, obj):
    """An n x n family of elements: {"images": [[termlist, ...], ...]}."""
    _check_config(H, obj)
    images = obj["images"]
    if len(images) != H.n or any(len(row) != H.n for row in images):
        raise ValueError("expected an %d x %d images array" % (H.n, H.n))
    return [
        [H.element(_terms_from_obj(H, cell)) for cell in row]
        for row in images
    ]
