"""Eight conditions on a finite-dimensional bialgebra, decided independently.

Each row is computed by its own route: solving for an antipode, building a
Frobenius system, checking the canonical map on Hopf modules, passing
through the dual, or exercising explicit adjunction bijections.  The panel
raises if any two rows disagree.

Run:  python demos/03_equivalent_conditions.py
"""

import time

from hopfrob import (
    cyclic_group_algebra,
    divided_power_char_p,
    idempotent_monoid_algebra,
    sweedler_h4,
    trivial,
)
from hopfrob.frob import summingup_report

for B in (trivial(), cyclic_group_algebra(3), divided_power_char_p(3), sweedler_h4(),
          idempotent_monoid_algebra()):
    start = time.perf_counter()
    panel = summingup_report(B)
    print(panel.render())
    print(f"  [{time.perf_counter() - start:.2f}s, consistent: {panel.consistent}]\n")
