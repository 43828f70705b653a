"""
Collective rates versus separation
==================================

Two atoms sharing the vacuum field decay collectively. The cross damping
``gamma12`` tends to ``gamma`` as the atoms approach, while the
dipole-dipole shift ``omega12`` grows like ``1/(kr)**3``.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dicke_revival import coupling_from_separation

r = np.linspace(0.02, 1.5, 400)
rates = [coupling_from_separation(x) for x in r]
g12 = np.array([c.gamma12 for c in rates])
om12 = np.array([c.omega12 for c in rates])

# %%
# The separations used for the death-time figure:
for x in (1.0, 1 / 3, 1 / 6, 1 / 20):
    c = coupling_from_separation(x)
    print(f"r = {x:.4f} lambda:  gamma12 = {c.gamma12:+.4f}  omega12 = {c.omega12:+.4f}")

# %%
fig, ax = plt.subplots(1, 2, figsize=(9, 3.5))
ax[0].plot(r, g12)
ax[0].set_xlabel("r12 / lambda")
ax[0].set_ylabel("gamma12 / gamma")
ax[1].semilogy(r, np.abs(om12))
ax[1].set_xlabel("r12 / lambda")
ax[1].set_ylabel("|omega12| / gamma")
fig.tight_layout()
fig.savefig("collective_rates.png", dpi=120)
