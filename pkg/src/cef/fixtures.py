"""Embedded reference values for the two series at the canonical
diagonal points x = y in {0.01, 0.1, 0.5, 1, 2.5, 5, 7.5, 10, 12.5, 15}.

The text blocks below are kept verbatim as published, one table for the
real part (the Voigt function) and one for the imaginary part, and are
parsed rather than retyped into scattered constants. Columns: the
finite-interval series, the Chiarella-Reichel pole sum, and TOMS
Algorithm 680 (Poppe & Wijers, 1990) as the high-accuracy reference.

Markers on the pole-sum column record its documented behaviour at small
y: '!' failed outright, '~' insufficient accuracy, '_' reduced but usable
accuracy. The failed values are intentionally preserved; reproducing them
is a fidelity check on the implementation, not a defect.
"""

from __future__ import annotations

from typing import NamedTuple

__all__ = ["ReferenceRow", "reference_rows", "CR_STATUS_LABELS"]

_REAL_TABLE = """\
0.01  0.01  9.887176929549550E-1  !4.196286232960261E0   9.887176929549547E-1
0.1   0.1   8.884785624756435E-1  !7.590865094856971E-1  8.884785624756436E-1
0.5   0.5   5.331567079121748E-1  ~5.331626469616391E-1  5.331567079121750E-1
1     1     3.047442052569125E-1  _3.047442051814129E-1  3.047442052569128E-1
2.5   2.5   1.167371250446503E-1  1.167371250446503E-1   1.167371250446503E-1
5     5     5.696543988817698E-2  5.696543988817699E-2   5.696543988817697E-2
7.5   7.5   3.777752935845998E-2  3.777752935845999E-2   3.777752935846000E-2
10    10    2.827946745423245E-2  2.827946745423246E-2   2.827946745423246E-2
12.5  12.5  2.260351678541391E-2  2.260351678541392E-2   2.260351678541391E-2
15    15    1.882714532513676E-2  1.882714532513675E-2   1.882714532513676E-2
"""

_IMAG_TABLE = """\
0.01  0.01  1.108529605747765E-2  !4.137187541585456E0   1.108529605747726E-2
0.1   0.1   9.433165105728508E-2  !2.042540773419453E-1  9.433165105728510E-2
0.5   0.5   2.304882313844584E-1  ~2.304774733809673E-1  2.304882313844584E-1
1     1     2.082189382028317E-1  _2.082189382021634E-1  2.082189382028316E-1
2.5   2.5   1.079085859964814E-1  1.079085859964814E-1   1.079085859964814E-1
5     5     5.583874277539103E-2  5.583874277539103E-2   5.583874277539103E-2
7.5   7.5   3.744329372959511E-2  3.744329372959512E-2   3.744329372959514E-2
10    10    2.813843327633689E-2  2.813843327633690E-2   2.813843327633690E-2
12.5  12.5  2.253130329137736E-2  2.253130329137737E-2   2.253130329137736E-2
15    15    1.878535427799564E-2  1.878535427799565E-2   1.878535427799565E-2
"""

_MARKERS = {"!": "failed", "~": "insufficient", "_": "reduced"}

# display labels for the pole-sum column, used by the table command
CR_STATUS_LABELS = {
    "failed": "inaccurate",
    "insufficient": "inaccurate (reduced precision)",
    "reduced": "slightly reduced precision",
    "accurate": "",
}


class ReferenceRow(NamedTuple):
    x: float
    y: float
    refined: complex
    cr: complex
    reference: complex
    cr_status: str  # 'accurate', 'reduced', 'insufficient', or 'failed'


def _parse_value(token: str) -> tuple[float, str]:
    status = "accurate"
    if token[0] in _MARKERS:
        status = _MARKERS[token[0]]
        token = token[1:]
    return float(token), status


def _parse_table(text: str) -> list[tuple[float, float, float, float, float, str]]:
    rows = []
    for line in text.strip().splitlines():
        x_tok, y_tok, refined_tok, cr_tok, ref_tok = line.split()
        refined, _ = _parse_value(refined_tok)
        cr, status = _parse_value(cr_tok)
        ref, _ = _parse_value(ref_tok)
        rows.append((float(x_tok), float(y_tok), refined, cr, ref, status))
    return rows


def reference_rows() -> tuple[ReferenceRow, ...]:
    """The ten reference rows with real and imaginary parts combined."""
    real_rows = _parse_table(_REAL_TABLE)
    imag_rows = _parse_table(_IMAG_TABLE)
    combined = []
    for re_row, im_row in zip(real_rows, imag_rows):
        assert re_row[0] == im_row[0] and re_row[1] == im_row[1]
        assert re_row[5] == im_row[5], "status markers must match across tables"
        combined.append(ReferenceRow(
            x=re_row[0], y=re_row[1],
            refined=complex(re_row[2], im_row[2]),
            cr=complex(re_row[3], im_row[3]),
            reference=complex(re_row[4], im_row[4]),
            cr_status=re_row[5],
        ))
    return tuple(combined)
