"""
Dark periods and revivals
=========================

Start from ``sqrt(0.9)|e> + sqrt(0.1)|g>``. For independent atoms the
concurrence dies once. At ``r = lambda/20`` it dies, revives when the
symmetric population drops below ``2|rho_eg|``, dies again, and finally
revives for good as the long-lived antisymmetric state fills up.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dicke_revival import (
    CollectiveCoupling,
    analytic_trajectory,
    approx_death_revival,
    coupling_from_separation,
    find_zero_crossings,
    second_revival_estimate,
)

p = 0.9
t = np.linspace(0.0, 20.0, 20001)
close = coupling_from_separation(1 / 20)
coll = analytic_trajectory(p, close, t)
ind = analytic_trajectory(p, CollectiveCoupling.independent(), t)

# %%
# Event times, refined on the closed form.
ev = find_zero_crossings(coll)
for when, what in ev.crossings:
    print(f"{what:8s} at gamma t = {when:.4f}")
print("dark intervals:", [(round(a, 4), round(b, 4)) for a, b in ev.dark_intervals])
print("independent atoms:", find_zero_crossings(ind).crossings)

# %%
# The strong-damping approximation and the long-time estimate are rougher:
print("approximate (t_d, t_r):", approx_death_revival(p))
print("second revival estimate:", second_revival_estimate(p, close))

# %%
fig, ax = plt.subplots(1, 2, figsize=(10, 3.5))
ax[0].plot(t, coll.c, label="r = lambda/20")
ax[0].plot(t, ind.c, "--", label="independent")
ax[0].set_xlim(0, 10)
ax[0].set_xlabel("gamma t")
ax[0].set_ylabel("C(t)")
ax[0].legend()

x = coll.states
ax[1].plot(t, 2 * np.abs(x.rho_eg), "--", label="2|rho_eg|")
ax[1].plot(t, x.rho_ss, "-.", label="rho_ss")
ax[1].plot(t, coll.c, label="C")
ax[1].set_xlim(0, 3)
ax[1].set_xlabel("gamma t")
ax[1].legend()
fig.tight_layout()
fig.savefig("dark_periods.png", dpi=120)
