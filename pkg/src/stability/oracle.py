"""
Oráculo de Crescimento
Itera diretamente a recorrência escalar do par semi-implícito a partir de
um histórico aleatório unitário e mede a amplificação
"""

from dataclasses import dataclass

import numpy as np

from src.exceptions import ConfigError
from src.schemes import SchemeCoefficients

MIN_STEPS = 100
GROWTH_LIMIT = np.log(10.0)
_RESCALE_ABOVE = 1e100
_RESCALE_BELOW = 1e-100


@dataclass(frozen=True)
class GrowthReport:
    """Resultado do oráculo em um nó"""

    max_amplification: float
    stable: bool


def growth_oracle_grid(c: SchemeCoefficients, z_R, z_I_mag, n_steps: int = 1000, seed: int = 0):
    """
    Oráculo vetorizado sobre vários nós

    u-linha (preditor) û = -Σ ã_j v_j + z Σ b̃_j v_j, v-linha
    v = (-Σ a_j v_j + z Σ b_j v_j + b_{-1} z_I û) / (1 - b_{-1} z_R), com
    z = z_R + z_I. Estável quando o máximo de |v^n| na segunda metade do run
    não passa de 10× o máximo da primeira metade (ou do histórico unitário).

    Returns:
        (max_amplification, stable) como arrays da forma de z_R
    """
    if n_steps < MIN_STEPS:
        raise ConfigError(f"growth_oracle precisa de ao menos {MIN_STEPS} passos (recebido {n_steps})")

    z_R, z_I_mag = np.broadcast_arrays(np.asarray(z_R, dtype=float), np.asarray(z_I_mag, dtype=float))
    shape = z_R.shape
    z_R = z_R.ravel()
    z_I = 1j * z_I_mag.ravel()
    z = z_R + z_I
    b_m1 = c.b_m1_float
    s = c.s

    rng = np.random.default_rng(seed)
    # linha j = v^{n-j}
    history = np.exp(2j * np.pi * rng.random((s, z_R.size)))
    log_scale = np.zeros(z_R.size)
    first_half = np.zeros(z_R.size)
    second_half = np.full(z_R.size, -np.inf)
    blown = np.zeros(z_R.size, dtype=bool)
    half = n_steps // 2

    ta = c.tilde_a_array[:, None]
    tb = c.tilde_b_array[:, None]
    a = c.a_array[:, None]
    b = c.b_array[:, None]
    with np.errstate(all='ignore'):
        denominator = 1.0 - b_m1 * z_R
        for n in range(n_steps):
            u_hat = -(ta * history).sum(axis=0) + z * (tb * history).sum(axis=0)
            v_new = (-(a * history).sum(axis=0) + z * (b * history).sum(axis=0) + b_m1 * z_I * u_hat) / denominator
            history = np.roll(history, 1, axis=0)
            history[0] = v_new
            blown |= ~np.isfinite(v_new)

            log_abs = np.log(np.abs(v_new)) + log_scale
            if n < half:
                first_half = np.fmax(first_half, log_abs)
            else:
                second_half = np.fmax(second_half, log_abs)

            peak = np.max(np.abs(history), axis=0)
            rescale = np.isfinite(peak) & ((peak > _RESCALE_ABOVE) | ((peak < _RESCALE_BELOW) & (peak > 0.0)))
            if rescale.any():
                history[:, rescale] /= peak[rescale]
                log_scale[rescale] += np.log(peak[rescale])

        finite = ~blown
        stable = finite & (second_half <= GROWTH_LIMIT + first_half)
        max_log = np.where(finite, np.fmax(first_half, second_half), np.inf)
        amplification = np.exp(max_log)

    return amplification.reshape(shape), stable.reshape(shape)


def growth_oracle(c: SchemeCoefficients, z_R: float, z_I_mag: float, n_steps: int = 1000,
                  seed: int = 0) -> GrowthReport:
    """Máximo de |v^n| ao longo do run em um nó; overflow conta como instável"""
    amplification, stable = growth_oracle_grid(c, z_R, z_I_mag, n_steps=n_steps, seed=seed)
    return GrowthReport(max_amplification=float(amplification), stable=bool(stable))
