"""Parliament configurations behind each measurement-outcome figure."""
from __future__ import annotations

from .config import ParliamentConfig


def _equal(n_a, n_b, n_i, r):
    return ParliamentConfig(n_a, n_b, n_i, r, r)


FIGURES: dict[str, ParliamentConfig] = {
    "fig3": _equal(8, 6, 0, 0.0),
    "fig4": _equal(8, 6, 0, 1.0),
    "fig5": _equal(8, 6, 0, 0.1),
    "fig6": _equal(8, 6, 0, 0.3),
    "fig7": _equal(8, 6, 0, 0.5),
    "fig8": _equal(8, 6, 0, 0.7),
    "fig9": ParliamentConfig(8, 6, 0, 0.15, 0.30),
    "fig10": ParliamentConfig(8, 6, 0, 0.25, 0.50),
    "fig11": ParliamentConfig(8, 6, 0, 0.35, 0.70),
    "fig12": ParliamentConfig(8, 6, 0, 0.50, 1.00),
    "fig13": ParliamentConfig(8, 6, 0, 0.30, 0.15),
    "fig14": ParliamentConfig(8, 6, 0, 0.50, 0.25),
    "fig15": ParliamentConfig(8, 6, 0, 0.70, 0.35),
    "fig16": ParliamentConfig(8, 6, 0, 1.00, 0.50),
    "fig17": _equal(8, 4, 2, 0.0),
    "fig18": _equal(8, 4, 2, 1.0),
    "fig19": _equal(8, 4, 2, 0.1),
    "fig20": _equal(8, 4, 2, 0.3),
    "fig21": _equal(8, 4, 2, 0.5),
    "fig22": _equal(8, 4, 2, 0.7),
    "fig23": _equal(7, 7, 0, 0.0),
    "fig24": _equal(6, 6, 2, 0.0),
    "fig25": _equal(7, 7, 0, 0.2),
    "fig26": _equal(6, 6, 2, 0.2),
    "fig27": _equal(7, 7, 0, 0.5),
    "fig28": _equal(6, 6, 2, 0.5),
}
