"""Reference cases: the worked examples, the factorization displays and the tables.

Table rows are transcribed by hand from the compact ascending-coefficient
notation into the polynomial grammar; each row keeps the original string in
a comment.  Expected parameters are Gray-image [2N, k, d].
"""
from __future__ import annotations

from dataclasses import dataclass, field

FROBENIUS = 1


@dataclass(frozen=True)
class GoldenCase:
    ident: str
    field: tuple                  # (p, d)
    ring: str                     # "Fq" or "S"
    blocks: tuple
    generators: tuple             # ledger rows, one polynomial string per block
    expected: tuple | None = None  # [n, k, d]
    parity_check: str | None = None
    matrix: tuple | None = None
    kind: str = "1gen"
    theta_t: int = FROBENIUS
    note: str = ""

    def to_doc(self, convention: str = "paper-table") -> dict:
        return {
            "field": {"p": self.field[0], "d": self.field[1]},
            "theta_t": self.theta_t if self.field[1] > 1 else 0,
            "ring": self.ring,
            "blocks": list(self.blocks),
            "generators": [list(g) for g in self.generators],
            "kind": self.kind,
            "convention": convention,
        }


@dataclass(frozen=True)
class Identity:
    ident: str
    field: tuple
    ring: str
    n: int
    left: str
    right: str
    theta_t: int = FROBENIUS


EXAMPLES = [
    GoldenCase(
        "example-1", (2, 2), "S", (4, 6), (("x^2+1", "x^3+1"),), (20, 4, 8),
        parity_check="x^4+x^3+x+1",
        matrix=((1, 0, 1, 0, 1, 0, 0, 1, 0, 0),
                (0, 1, 0, 1, 0, 1, 0, 0, 1, 0),
                (1, 0, 1, 0, 0, 0, 1, 0, 0, 1),
                (0, 1, 0, 1, 1, 0, 0, 1, 0, 0))),
    GoldenCase(
        "example-2", (3, 2), "S", (4, 8), (("x^2+2", "x^6+2*x^4+x^2+2"),), (24, 2, 12),
        parity_check="x^2+1",
        matrix=((2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1),
                (0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2))),
    GoldenCase("example-4-c1", (2, 2), "Fq", (4, 6), (("x^2+x+t", "x^2+t*x+1"),), (10, 5, 4)),
    GoldenCase("example-4-c2", (2, 2), "Fq", (4, 6), (("x^2+t*x+t", "x^3+t*x^2+t*x+1"),), (10, 5, 3)),
    GoldenCase("example-5-c1", (3, 2), "Fq", (4, 6), (("x^2+t^6*x+t", "x^2+t^3*x+t^2"),), (10, 5, 4)),
    GoldenCase("example-5-c2", (3, 2), "Fq", (4, 6), (("x+t^3", "x^2+t^7*x+t^2"),), (10, 5, 4)),
    GoldenCase("example-6", (2, 2), "Fq", (3, 5), (("x^2+x+1", "x^4+x^3+x^2+x+1"),), (8, 1, 8),
               parity_check="x+1"),
    GoldenCase("example-7", (2, 2), "Fq", (3, 5, 7),
               (("x^2+x+1", "x^4+x^3+x^2+x+1", "x^4+x^2+x+1"),), (15, 4, 4),
               parity_check="x^4+x^3+x^2+1"),
]

# combined codes (1 - v)C1 + vC2 over F_q components
COMBINED = {
    "example-4": ("example-4-c1", "example-4-c2", (20, 10, 3)),
    "example-5": ("example-5-c1", "example-5-c2", (20, 10, 4)),
}

IDEMPOTENTS = [
    # (field, n, polynomial)
    ((2, 2), 3, "x^2+x+1"),
    ((2, 2), 5, "x^4+x^3+x^2+x+1"),
    ((2, 2), 7, "x^4+x^2+x+1"),
]


def _tri(f1: str, p21: str, f2: str) -> tuple:
    return ((f1, "0"), (p21, f2))


# Table 1, F_3 + vF_3 (theta is the identity on F_3)
_T1_F = "((2)+v*(2))+2*x+((1)+v*(1))*x^2+x^3"   # (2v+2)2(v+1)1
_T1_P = "((1)+v*(1))+((2)+v*(1))*x+x^2"         # (v+1)(v+2)1
TABLE1 = [
    GoldenCase("table1-row1", (3, 1), "S", (6, 1), _tri(_T1_F, _T1_P, "1"), (14, 4, 7), kind="rho", theta_t=0),
    GoldenCase("table1-row2", (3, 1), "S", (6, 2), _tri(_T1_F, _T1_P, "1+x"), (16, 4, 7), kind="rho", theta_t=0),
    GoldenCase("table1-row3", (3, 1), "S", (6, 3), _tri(_T1_F, _T1_P, "1+x+x^2"), (18, 4, 7), kind="rho",
               theta_t=0),
    GoldenCase("table1-row4", (3, 1), "S", (6, 4), _tri(_T1_F, _T1_P, "1+x+x^2+x^3"), (20, 4, 7), kind="rho",
               theta_t=0),
    # f_t2 = 21021021
    GoldenCase("table1-row5", (3, 1), "S", (6, 9),
               _tri(_T1_F, _T1_P, "2+x+2*x^3+x^4+2*x^6+x^7"), (30, 5, 7), kind="rho", theta_t=0),
]

# Table 2, F_9 + vF_9
TABLE2 = [
    # f_t1 = 1(v+2)(v+2)1, p21 = 1(v+1)1, f_t2 = 21
    GoldenCase("table2-row1", (3, 2), "S", (6, 2),
               _tri("1+(v+2)*x+(v+2)*x^2+x^3", "1+(v+1)*x+x^2", "2+x"), (16, 4, 6), kind="rho"),
    # f_t1 = 2(v+2)(2v+1)1, p21 = 1(2v+2)1, f_t2 = 1
    GoldenCase("table2-row2", (3, 2), "S", (6, 1),
               _tri("2+(v+2)*x+(2*v+1)*x^2+x^3", "1+(2*v+2)*x+x^2", "1"), (14, 4, 6), kind="rho"),
    # f_t1 = t^52t1, p21 = t^7t1, f_t2 = t^61
    GoldenCase("table2-row3", (3, 2), "S", (4, 2),
               _tri("t^5+2*x+t*x^2+x^3", "t^7+t*x+x^2", "t^6+x"), (12, 2, 8), kind="rho"),
    # f_t2 = t^61t^61t^61
    GoldenCase("table2-row4", (3, 2), "S", (4, 6),
               _tri("t^5+2*x+t*x^2+x^3", "t^7+t*x+x^2", "t^6+x+t^6*x^2+x^3+t^6*x^4+x^5"), (20, 2, 8),
               kind="rho"),
]

# Table 3, F_4 + vF_4
_T3_F = "(v+t)+x+(v+t)*x^2+x^3"                 # (v+t)1(v+t)1
TABLE3 = [
    # f_t1 = 101, p21 = 101, f_t2 = 1010101
    GoldenCase("table3-row1", (2, 2), "S", (4, 8), _tri("1+x^2", "1+x^2", "1+x^2+x^4+x^6"), (24, 4, 4),
               kind="rho"),
    # f_t1 = t1t1, p21 = t^21, f_t2 = 11
    GoldenCase("table3-row2", (2, 2), "S", (4, 8), _tri("t+x+t*x^2+x^3", "t^2+x", "1+x"), (24, 8, 6),
               kind="rho"),
    # p21 = (v+t)(v+t)1, f_t2 = 1
    GoldenCase("table3-row3", (2, 2), "S", (4, 1), _tri(_T3_F, "(v+t)+(v+t)*x+x^2", "1"), (10, 2, 8),
               kind="rho"),
    # p21 = (v+t)1(v+t), f_t2 = 1111
    GoldenCase("table3-row4", (2, 2), "S", (8, 4), _tri(_T3_F, "(v+t)+x+(v+t)*x^2", "1+x+x^2+x^3"),
               (24, 6, 7), kind="rho"),
    GoldenCase("table3-row5", (2, 2), "S", (8, 4), _tri(_T3_F, "(v+t)+(v+t)*x+x^2", "1"), (24, 9, 4),
               kind="rho", note="same generators as row 6 with a different profile; transcribed as printed"),
    GoldenCase("table3-row6", (2, 2), "S", (8, 1), _tri(_T3_F, "(v+t)+(v+t)*x+x^2", "1"), (18, 6, 7),
               kind="rho"),
    # printed as "(v+t)1(v+t)1 c"; the trailing "c" is dropped
    GoldenCase("table3-row7", (2, 2), "S", (4, 2), _tri(_T3_F, "(v+t)+(v+t)*x+x^2", "1+x"), (12, 2, 8),
               kind="rho", note="stray 'c' after f_t1 dropped"),
    # f_t1 = 1001, p21 = 111, f_t2 = 1
    GoldenCase("table3-row8", (2, 2), "S", (6, 1), _tri("1+x^3", "1+x+x^2", "1"), (14, 4, 4), kind="rho"),
]

TABLES = {1: TABLE1, 2: TABLE2, 3: TABLE3}

IDENTITIES = [
    Identity("f4-x4-a", (2, 2), "Fq", 4, "x^2+x+t^2", "x^2+x+t"),
    Identity("f4-x4-b", (2, 2), "Fq", 4, "x^2+t^2*x+t", "x^2+t*x+t"),
    Identity("f4-x6-a", (2, 2), "Fq", 6, "x^4+t*x^3+t*x+1", "x^2+t*x+1"),
    Identity("f4-x6-b", (2, 2), "Fq", 6, "x^3+t^2*x^2+t*x+1", "x^3+t*x^2+t*x+1"),
    Identity("f9-x4-a", (3, 2), "Fq", 4, "x^2+t^2*x+t^3", "x^2+t^6*x+t"),
    Identity("f9-x4-b", (3, 2), "Fq", 4, "x^3+t^5*x^2+2*x+t", "x+t^3"),
    Identity("f9-x6-a", (3, 2), "Fq", 6, "x^4+t^7*x^3+t^3*x^2+t^3*x+t^2", "x^2+t^3*x+t^2"),
    Identity("f9-x6-b", (3, 2), "Fq", 6, "x^4+t^3*x^3+t^3*x^2+t^7*x+t^2", "x^2+t^7*x+t^2"),
    Identity("s4-x8-a", (2, 2), "S", 8, "x^5+(v+t^2)*x^4+x^3+(v+t)*x^2+1", "x^3+(v+t)*x^2+1"),
    Identity("s4-x8-b", (2, 2), "S", 8, "x^5+(v+t)*x^4+x^3+(v+t^2)*x^2+1", "x^3+(v+t^2)*x^2+1"),
    Identity("s4-x8-c", (2, 2), "S", 8, "x^4+v*x^3+(t^2*v+1)*x^2+x+t^2", "x^4+v*x^3+(t*v+1)*x^2+x+t"),
    Identity("s4-x8-d", (2, 2), "S", 8, "x^5+(t^2*v+1)*x^4+(v+1)*x^3+(t^2*v+t^2)*x^2+v*x+t",
             "x^3+(t*v+1)*x^2+v*x+t^2"),
    Identity("s9-x6-a", (3, 2), "S", 6, "x^4+(t^5*v+2)*x^3+(t*v+1)*x+2", "x^2+(t*v+1)*x+1"),
    Identity("s9-x6-b", (3, 2), "S", 6, "x^3+(t^2*v+2)*x^2+(t*v+t)*x+2", "x^3+(t^2*v+1)*x^2+(t*v+t)*x+1"),
    Identity("s9-x6-c", (3, 2), "S", 6, "x^3+(2*v+t)*x^2+(t^2*v+t^5)*x+2", "x^3+(v+t^7)*x^2+(t^2*v+t^5)*x+1"),
    Identity("s9-x6-d", (3, 2), "S", 6, "x^3+v*x^2+2*v*x+2", "x^3+2*v*x^2+2*v*x+1"),
]


def all_cases() -> dict:
    out = {c.ident: c for c in EXAMPLES}
    for rows in TABLES.values():
        out.update({c.ident: c for c in rows})
    return out
