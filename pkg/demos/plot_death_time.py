"""
Death time versus initial excitation
====================================

Independent atoms lose their entanglement in finite time only for
``p > 1/2``. Collective damping widens that range until, for close
atoms, every entangled initial state dies suddenly.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dicke_revival import death_time_independent, death_time_scan

p_grid = np.arange(1, 100) / 100
fig, ax = plt.subplots(figsize=(5, 3.5))
for r, style in ((1.0, "-"), (1 / 3, "--"), (1 / 6, "-."), (1 / 20, ":")):
    scan = death_time_scan(r, p_grid)
    p = [q for q, t in scan if t is not None]
    td = [t for _, t in scan if t is not None]
    print(f"r = {r:.4f} lambda: sudden death for {len(p)}/{len(p_grid)} values of p")
    ax.plot(p, td, style, label=f"r = {r:.3g} lambda")

# %%
# Closed form for independent atoms, for comparison.
eq14 = [death_time_independent(q) for q in p_grid]
ax.plot(p_grid, [np.nan if t is None else t for t in eq14], color="gray", lw=0.8, label="independent")
ax.set_xlabel("p")
ax.set_ylabel("gamma t_d")
ax.set_ylim(0, 10)
ax.legend()
fig.tight_layout()
fig.savefig("death_time.png", dpi=120)
