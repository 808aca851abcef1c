"""Curated reference values for small parameters.

Every row here is an independent regression target: the term lists and the
generating functions were transcribed by hand and are never computed by this
package.  The verification suites recompute each row from the defining
formulas and compare exactly.

Generating functions are stored in factored shape (numerator factors, a
linear denominator base raised to a power, and optional integer scale/sign)
and expanded on demand, which keeps the transcription close to its printed
form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial, RationalGF


@dataclass(frozen=True)
class GFSpec:
    """A rational function written as sign * prod(num_factors) / (scale * base^power)."""

    num_factors: tuple[tuple[int, ...], ...]
    den_base: tuple[int, ...]
    den_power: int
    den_scale: int = 1
    sign: int = 1

    def expand(self) -> RationalGF:
        numerator = Polynomial([self.sign])
        for factor in self.num_factors:
            numerator = numerator * Polynomial(factor)
        denominator = self.den_scale * Polynomial(self.den_base) ** self.den_power
        return RationalGF(numerator, denominator)


@dataclass(frozen=True)
class BTableRow:
    k: int
    q: Fraction | int
    terms: tuple[Fraction | int, ...]
    gf: GFSpec


@dataclass(frozen=True)
class ATableRow:
    k: int
    q: int
    gf: GFSpec
    oeis_id: str | None = None


@dataclass(frozen=True)
class CTableRow:
    J: int
    q: int
    terms: tuple[int, ...]
    gf: GFSpec


def _gf(num_factors, den_base, den_power, den_scale=1, sign=1) -> GFSpec:
    return GFSpec(
        tuple(tuple(f) for f in num_factors), tuple(den_base), den_power, den_scale, sign
    )


def _fractions(text: str) -> tuple[Fraction | int, ...]:
    out = []
    for piece in text.split():
        value = Fraction(piece)
        out.append(int(value) if value.denominator == 1 else value)
    return tuple(out)


B_TABLE: tuple[BTableRow, ...] = (
    BTableRow(0, 0, (1,) + (0,) * 15, _gf([], [1], 1)),
    BTableRow(0, 1, tuple((-1) ** n for n in range(16)), _gf([], [1, 1], 1)),
    BTableRow(0, 2, tuple((-2) ** n for n in range(12)), _gf([], [1, 2], 1)),
    BTableRow(0, 3, tuple((-3) ** n for n in range(12)), _gf([], [1, 3], 1)),
    BTableRow(1, 0, (1,) + (0,) * 15, _gf([], [1], 1)),
    BTableRow(
        1,
        Fraction(1, 2),
        _fractions("1 -7/8 5/8 -13/32 1/4 -19/128 11/128"),
        _gf([[8, 1]], [2, 1], 2, den_scale=2),
    ),
    BTableRow(1, 1, tuple((-1) ** n * (n + 1) for n in range(16)), _gf([], [1, 1], 2)),
    BTableRow(
        1,
        Fraction(3, 2),
        _fractions("1 -27/8 63/8 -513/32 243/8 -7047/128 12393/128 -85293/512"),
        _gf([[8, -3]], [2, 3], 2, den_scale=2),
    ),
    BTableRow(
        1,
        2,
        (1, -5, 16, -44, 112, -272, 640, -1472, 3328, -7424, 16384, -35840),
        _gf([[1, -1]], [1, 2], 2),
    ),
    BTableRow(
        1,
        3,
        (1, -9, 45, -189, 729, -2673, 9477, -32805, 111537, -373977, 1240029, -4074381),
        _gf([[1, -3]], [1, 3], 2),
    ),
    BTableRow(
        1,
        4,
        (1, -14, 96, -544, 2816, -13824, 65536, -303104, 1376256, -6160384, 27262976),
        _gf([[1, -6]], [1, 4], 2),
    ),
    BTableRow(
        1,
        5,
        (1, -20, 175, -1250, 8125, -50000, 296875, -1718750, 9765625, -54687500),
        _gf([[1, -10]], [1, 5], 2),
    ),
    BTableRow(2, 0, (1,) + (0,) * 15, _gf([], [1], 1)),
    BTableRow(
        2,
        1,
        tuple((-1) ** n * (n + 1) * (n + 2) // 2 for n in range(16)),
        _gf([], [1, 1], 3),
    ),
    BTableRow(
        2,
        2,
        (1, -9, 41, -146, 456, -1312, 3568, -9312, 23552, -58112, 140544),
        _gf([[1, -3, -1]], [1, 2], 3),
    ),
    BTableRow(
        2,
        3,
        (1, -19, 141, -783, 3753, -16443, 67797, -267543, 1021329, -3798819),
        _gf([[1, -10, -3]], [1, 3], 3),
    ),
    BTableRow(
        2,
        4,
        (1, -34, 356, -2704, 17536, -103424, 572416, -3026944, 15466496, -76939264),
        _gf([[1, -22, -4]], [1, 4], 3),
    ),
    BTableRow(
        2,
        5,
        (1, -55, 750, -7250, 59375, -440625, 3062500, -20312500, 130078125),
        _gf([[1, -40]], [1, 5], 3),
    ),
    BTableRow(3, 0, (1,) + (0,) * 15, _gf([], [1], 1)),
    BTableRow(
        3,
        1,
        tuple((-1) ** n * (n + 1) * (n + 2) * (n + 3) // 6 for n in range(16)),
        _gf([], [1, 1], 4),
    ),
    BTableRow(
        3,
        2,
        (1, -14, 85, -377, 1408, -4712, 14608, -42800, 120064, -325376, 857344),
        _gf([[1, -6, -3, -1]], [1, 2], 4),
    ),
    BTableRow(
        3,
        3,
        (1, -34, 351, -2484, 14445, -74358, 352107, -1568808, 6672537, -27359370),
        _gf([[1, -22, -3]], [1, 3], 4),
    ),
    BTableRow(
        3,
        4,
        (1, -69, 1036, -10184, 80896, -564224, 3603456, -21592064, 123273216),
        _gf([[1, -1], [1, -52, -24]], [1, 4], 4),
    ),
)


def _a_rows() -> tuple[ATableRow, ...]:
    rows = []
    for k in range(6):
        rows.append(ATableRow(k, 0, _gf([[-1]], [-1, 1], 1)))
    for q in range(1, 6):
        rows.append(ATableRow(0, q, _gf([[-1]], [-1, q + 1], 1)))
    rows += [
        ATableRow(1, 1, _gf([[-1, 1]], [-1, 2], 2, sign=-1)),
        ATableRow(1, 2, _gf([[1]], [-1, 3], 2), "A027471"),
        ATableRow(1, 3, _gf([[1, 2]], [-1, 4], 2)),
        ATableRow(1, 4, _gf([[1, 5]], [-1, 5], 2)),
        ATableRow(1, 5, _gf([[1, 9]], [-1, 6], 2)),
        ATableRow(2, 1, _gf([[-1, 1], [-1, 1]], [-1, 2], 3, sign=-1)),
        ATableRow(2, 2, _gf([[-1, -1, 3]], [-1, 3], 3)),
        ATableRow(2, 3, _gf([[-1, -8, 12]], [-1, 4], 3), "A361609"),
        ATableRow(2, 4, _gf([[-1, -20, 25]], [-1, 5], 3)),
        ATableRow(2, 5, _gf([[-1, 1], [1, 39]], [-1, 6], 3)),
        ATableRow(3, 1, _gf([[-1, 1]] * 3, [-1, 2], 4, sign=-1)),
        ATableRow(3, 2, _gf([[1, 3, -12, 9]], [-1, 3], 4)),
        ATableRow(3, 3, _gf([[-1, 1], [-1, -20, 24]], [-1, 4], 4)),
        ATableRow(3, 4, _gf([[-1, -50, 75]], [-1, 5], 4, sign=-1), "A361610"),
        ATableRow(3, 5, _gf([[-1, -102, 57, 171]], [-1, 6], 4, sign=-1)),
        ATableRow(4, 1, _gf([[-1, 1]] * 4, [-1, 2], 5, sign=-1)),
        ATableRow(4, 2, _gf([[-1, -6, 29, -39, 18]], [-1, 3], 5)),
        ATableRow(4, 3, _gf([[1, 36, -92, 48, 16]], [-1, 4], 5, sign=-1)),
        ATableRow(4, 4, _gf([[1, 101, -65, -425, 500]], [-1, 5], 5, sign=-1)),
        ATableRow(4, 5, _gf([[1, 222, 388, -2496, 2385]], [-1, 6], 5, sign=-1)),
        ATableRow(5, 1, _gf([[-1, 1]] * 5, [-1, 2], 6, sign=-1)),
        ATableRow(5, 2, _gf([[1, 10, -55, 99, -81, 27]], [-1, 3], 6)),
        ATableRow(5, 3, _gf([[-1, -60, 132, 100, -432, 288]], [-1, 4], 6, sign=-1)),
        ATableRow(5, 4, _gf([[-1, -180, -270, 2800, -4625, 2500]], [-1, 5], 6, sign=-1)),
        ATableRow(5, 5, _gf([[-1, 1], [1, 427, 3123, -10206, 7155]], [-1, 6], 6, sign=-1)),
        ATableRow(5, 6, _gf([[1, 882, 10731, -40474, 36015]], [-1, 7], 6), "A361608"),
    ]
    return tuple(sorted(rows, key=lambda r: (r.k, r.q)))


A_TABLE: tuple[ATableRow, ...] = _a_rows()


C_TABLE: tuple[CTableRow, ...] = (
    CTableRow(1, 3, (1, 4, 7, 10, 13, 16, 19, 22, 25), _gf([[1, 2]], [1, -1], 2)),
    CTableRow(1, 4, (1, 5, 9, 13, 17, 21, 25, 29, 33), _gf([[1, 3]], [1, -1], 2)),
    CTableRow(1, 5, (1, 6, 11, 16, 21, 26, 31, 36, 41), _gf([[1, 4]], [1, -1], 2)),
    CTableRow(2, 3, (1, 10, 28, 55, 91, 136, 190, 253, 325), _gf([[1, 7, 1]], [1, -1], 3)),
    CTableRow(2, 4, (1, 15, 45, 91, 153, 231, 325, 435, 561), _gf([[1, 12, 3]], [1, -1], 3)),
    CTableRow(2, 5, (1, 21, 66, 136, 231, 351, 496, 666, 861), _gf([[1, 18, 6]], [1, -1], 3)),
    CTableRow(3, 3, (1, 20, 84, 220, 455, 816, 1330, 2024, 2925), _gf([[1, 16, 10]], [1, -1], 4)),
    CTableRow(
        3, 4, (1, 35, 165, 455, 969, 1771, 2925, 4495, 6545),
        _gf([[1, 1], [1, 30, 1]], [1, -1], 4),
    ),
    CTableRow(
        3, 5, (1, 56, 286, 816, 1771, 3276, 5456, 8436, 12341),
        _gf([[1, 52, 68, 4]], [1, -1], 4),
    ),
    CTableRow(
        4, 3, (1, 35, 210, 715, 1820, 3876, 7315, 12650, 20475),
        _gf([[1, 30, 45, 5]], [1, -1], 5),
    ),
    CTableRow(
        4, 4, (1, 70, 495, 1820, 4845, 10626, 20475, 35960, 58905),
        _gf([[1, 65, 155, 35]], [1, -1], 5),
    ),
    CTableRow(
        4, 5, (1, 126, 1001, 3876, 10626, 23751, 46376, 82251, 135751),
        _gf([[1, 121, 381, 121, 1]], [1, -1], 5),
    ),
    CTableRow(
        5, 3, (1, 56, 462, 2002, 6188, 15504, 33649, 65780, 118755),
        _gf([[1, 50, 141, 50, 1]], [1, -1], 6),
    ),
    CTableRow(
        5, 4, (1, 126, 1287, 6188, 20349, 53130, 118755, 237336, 435897),
        _gf([[1, 120, 546, 336, 21]], [1, -1], 6),
    ),
    CTableRow(
        5, 5, (1, 252, 3003, 15504, 53130, 142506, 324632, 658008, 1221759),
        _gf([[1, 246, 1506, 1246, 126]], [1, -1], 6),
    ),
)
