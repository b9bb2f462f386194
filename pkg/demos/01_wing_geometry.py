"""Wing planforms: the study wing set, blade elements, and the inboard cutout.

Builds the three constant-aspect-ratio wings of the lift/power study
(20.1, 25.5, 31.4 cm^2), shows how the spanwise discretization conserves
area, and applies the inboard-membrane cutout to the baseline wing.
"""

import numpy as np

from wingbeat import apply_inboard_cutout, discretize, standard_wing

print("Study wing set (aspect ratio fixed at 3.2)")
print(f"{'area cm^2':>10} {'span cm':>9} {'mean chord cm':>14} {'AR':>6}")
for area_cm2 in (20.1, 25.5, 31.4):
    wing = standard_wing(area_cm2)
    print(f"{wing.area * 1e4:10.2f} {wing.span * 100:9.2f} "
          f"{wing.mean_chord * 100:14.3f} {wing.aspect_ratio:6.2f}")

wing = standard_wing(25.5)
print("\nBaseline 25.5 cm^2 wing, 20 blade elements:")
elements = discretize(wing, 20)
print(f"  element width {elements.width[0] * 1000:.2f} mm, "
      f"radii {elements.radius[0] * 100:.2f} .. {elements.radius[-1] * 100:.2f} cm")
print(f"  summed element area {elements.active_area * 1e4:.3f} cm^2 "
      f"(wing area {wing.area * 1e4:.3f} cm^2)")

print("\nInboard cutout: membrane removed from root to 25% span")
cut = apply_inboard_cutout(wing, 0.25)
print(f"  intact {wing.area * 1e4:.2f} cm^2 -> modified {cut.area * 1e4:.2f} cm^2 "
      f"({100 * cut.removed_area / wing.area:.1f}% removed)")
print(f"  span unchanged: {cut.span * 100:.2f} cm; "
      f"area additivity: {cut.area * 1e4:.4f} + {cut.removed_area * 1e4:.4f} "
      f"= {(cut.area + cut.removed_area) * 1e4:.4f} cm^2")

cut_elements = discretize(cut, 20)
masked = cut_elements.area_scale < 1.0
print(f"  {int(np.sum(masked))} of 20 elements carry no membrane "
      f"(area scale {cut_elements.area_scale[:6]})")
