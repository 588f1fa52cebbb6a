"""Composite Gauss-Legendre rules on [0, 2*pi].

The potential integrand is smooth and periodic away from the knot, so a
panel rule converges geometrically with rate set by the ratio of evaluation
distance to inter-node arc spacing; panels x nodes_per_panel is the only
tuning knob the rest of the package needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureRule:
    panels: int
    nodes_per_panel: int
    nodes: np.ndarray    # strictly increasing parameters in (0, 2*pi)
    weights: np.ndarray  # positive, summing to 2*pi

    @classmethod
    def gauss_legendre(cls, panels: int, nodes_per_panel: int) -> "QuadratureRule":
        if panels < 1 or nodes_per_panel < 1:
            raise ValueError("panels and nodes_per_panel must be positive")
        x, w = leggauss(nodes_per_panel)
        h = TWO_PI / panels
        starts = h * np.arange(panels)[:, None]
        nodes = (starts + 0.5 * h * (x[None, :] + 1.0)).ravel()
        weights = np.broadcast_to(0.5 * h * w, (panels, nodes_per_panel)).ravel().copy()
        return cls(panels, nodes_per_panel, nodes, weights)

    @property
    def total_nodes(self) -> int:
        return self.panels * self.nodes_per_panel

    def refined(self, factor: int) -> "QuadratureRule":
        """Same nodes-per-panel, `factor` times the panels."""
        return QuadratureRule.gauss_legendre(self.panels * factor, self.nodes_per_panel)
