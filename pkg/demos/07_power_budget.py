"""Input-power decomposition from bench-style electrical measurements.

Walks the measurement chain: shunt-resistor current, input power, Joule
loss, modelled aerodynamic and inertial power, and the flapping-mechanism
residual, with provenance flags on every term.
"""

import json

from wingbeat import (
    AeroEnvironment,
    GRAM_FORCE_NEWTONS,
    MotorElectrical,
    WingMassModel,
    beetle_kinematics,
    decompose,
    inertial_power,
    joule_loss,
    lift_to_power,
    shunt_current,
    simulate_cycle,
    standard_wing,
)

# Bench readings (illustrative): the external supply sits above the
# system voltage by the drop across a 2-ohm shunt.
v_supply, v_system, r_shunt = 7.30, 3.70, 2.0
current = shunt_current(v_supply, v_system, r_shunt)
p_in = v_system * current
print(f"shunt drop {v_supply - v_system:.2f} V across {r_shunt:.0f} ohm "
      f"-> I = {current:.3f} A, P_in = {p_in:.3f} W")

# Motor winding resistance is a required input; it is not published for
# this motor, so the demo uses a plausible bench value.
motor = MotorElectrical(resistance=1.0)
print(f"Joule loss at {current:.3f} A with R_m = {motor.resistance} ohm: "
      f"{joule_loss(current, motor):.3f} W")

# Model the aerodynamic and inertial terms at this operating point.
wing = standard_wing(23.7)
kin = beetle_kinematics(frequency_hz=13.0, amplitude_deg=190.0)
env = AeroEnvironment()
cycle = simulate_cycle(wing, kin, env)
mass = WingMassModel.from_wing(wing, total_mass=0.4e-3)
inertial = inertial_power(mass, kin)
print(f"model at {kin.frequency} Hz: lift "
      f"{cycle.mean_lift / GRAM_FORCE_NEWTONS:.1f} gf, "
      f"P_aero {cycle.mean_aero_power:.2f} W, "
      f"P_inertial {inertial.rectified_mean:.3f} W "
      f"(signed mean {inertial.signed_mean:+.2e} W)")

budget = decompose(p_in, current, motor, p_aero=cycle.mean_aero_power,
                   p_inertial=inertial.rectified_mean)
print("\nPower budget (mechanism term is the residual):")
print(json.dumps(budget.as_dict(), indent=2))
if budget.residual_negative:
    print("negative residual: the modelled terms exceed the measured input,")
    print("meaning at least one term or measurement is inconsistent")

print(f"\nlift-to-input-power  "
      f"{lift_to_power(cycle.mean_lift, p_in):.2f} gf/W")
print(f"lift-to-aero-power   "
      f"{lift_to_power(cycle.mean_lift, cycle.mean_aero_power):.2f} gf/W")
