"""Published reference values that the regenerated tables are checked against.

Every entry was transcribed from the benchmark tables this artifact
reproduces; tolerances live next to the comparison code in the acceptance
suite.  Stochastic columns (ensembles, random permutations) are reference
distributions, not exact targets.
"""

# generator diagnostics: n -> (mean adjacent dH, max adjacent dH, fraction dH=1)
DIAGNOSTICS_STRICT = {n: (1.000, 1, 1.000) for n in (5, 6, 7, 8)}
DIAGNOSTICS_V2 = {
    5: (1.452, 3, 0.774),
    6: (1.603, 3, 0.698),
    7: (1.740, 3, 0.630),
    8: (1.839, 3, 0.580),
}

STRICT_N8_SEARCH_NODES = 65717

# driver ablation on the centered strict-window barrier target (n=8, T=80, M=35)
# driver -> (fidelity, energy residual); hybrid controls w=8, alpha=0.50, eps=0.15
ABLATION = {
    "full_hybrid": (0.9799, 0.0085),
    "sector_path": (0.9697, 0.0148),
    "sector_tf": (0.9585, 0.0093),
    "sector_only": (0.9455, 0.0140),
    "tf_only": (0.8902, 0.0144),
    "path_tf": (0.4614, 0.1968),
    "path_only": (0.2490, 0.3293),
}

HEADLINE_FIDELITY = 0.9799  # full hybrid at (w, alpha, eps) = (8, 0.50, 0.15)

# slice-count convergence, same target: driver -> {slices: fidelity}
CONVERGENCE = {
    "tf_only": {35: 0.8902, 70: 0.8901, 140: 0.8901},
    "sector_only": {35: 0.9455, 70: 0.9453, 140: 0.9453},
    "sector_path": {35: 0.9697, 70: 0.9695, 140: 0.9694},
    "full_hybrid": {35: 0.9799, 70: 0.9797, 140: 0.9797},
    "path_only": {35: 0.2490, 70: 0.2489, 140: 0.2488},
}

# fine-scan summary: target -> dict of baselines, best hybrid, argmax point
FINE_SCAN = {
    "original_window_barrier": {
        "tf": 0.8902, "sector": 0.9455, "orig_path": 0.1739, "v2_path": 0.7647,
        "best": 0.9704, "best_source": "original", "best_alpha": 0.30, "best_epsilon": 0.10,
    },
    "v2_window_barrier": {
        "tf": 0.8553, "sector": 0.9455, "orig_path": 0.7353, "v2_path": 0.1739,
        "best": 0.9688, "best_source": "v2", "best_alpha": 0.25, "best_epsilon": 0.10,
    },
    "sector_well_r1": {
        "tf": 0.9985, "sector": 0.9855, "orig_path": 0.9107, "v2_path": 0.9107,
        "best": 0.9904, "best_source": "original", "best_alpha": 0.20, "best_epsilon": 0.10,
    },
    "original_mix_sector_path": {
        "tf": 0.9975, "sector": 0.9881, "orig_path": 0.7275, "v2_path": 0.9015,
        "best": 0.9918, "best_source": "v2", "best_alpha": 0.20, "best_epsilon": 0.10,
    },
    "v2_mix_sector_path": {
        "tf": 0.9979, "sector": 0.9881, "orig_path": 0.9029, "v2_path": 0.7275,
        "best": 0.9919, "best_source": "original", "best_alpha": 0.20, "best_epsilon": 0.10,
    },
}

# path-order controls: source -> (matched F, matched R, strict-target F, strict-target R)
CONTROLS_DETERMINISTIC = {
    "tf_only": (None, None, 0.8902, 0.0144),
    "sector_only": (None, None, 0.9455, 0.0140),
    "strict": (0.9799, 0.0085, 0.9799, 0.0085),
    "gray": (0.6718, 0.0418, 0.9617, 0.0071),
    "binary": (0.4754, 0.0265, 0.9482, 0.0087),
    "weight_block": (0.9594, 0.0147, 0.9534, 0.0094),
}
# ensembles over 64 samples: (matched mean, matched std, strict-target mean, strict-target std)
CONTROLS_ENSEMBLES = {
    "random_perm": (0.3192, 0.2770, 0.9638, 0.0049),
    "sector_preserving_random": (0.9773, 0.0010, 0.9621, 0.0065),
}

# diagonal transverse-field QA: family -> {encoding: mean success probability}
DIAGONAL_QA = {
    "index_well": {"binary": 0.0252, "gray": 0.0247, "strict": 0.0176, "v2": 0.0211},
    "sector_well": {"binary": 0.0135, "gray": 0.0120, "strict": 0.0106, "v2": 0.0107},
    "mix": {"binary": 0.0233, "gray": 0.0216, "strict": 0.0163, "v2": 0.0185},
    "barrier_path": {"binary": 0.0325, "gray": 0.0254, "strict": 0.0253, "v2": 0.0311},
}

# grid minimum gaps on the centered original-window barrier target
# driver -> (s at minimum, minimum gap).  The window4-only and w=4 hybrid
# reference values coincide with the E2-E1 spacing at s=0 of the faithful
# construction rather than with its E1-E0 gap; see the gap-table notes.
MINGAP = {
    "tf_only": (0.9286, 0.0690),
    "sector_only": (0.0000, 0.0376),
    "orig_window4_only": (0.0000, 0.00118),
    "orig_hybrid_w4": (0.0000, 0.0208),
    "orig_hybrid_w8": (1.0000, 0.0691),
}
MINGAP_EXCITED_SPACING_ROWS = ("orig_window4_only", "orig_hybrid_w4")

# banding MeanBand at n=8: family -> {ordering: value} plus random-permutation stats
BANDING = {
    "sector_dense_r1": {"strict": 50.55, "v2": 50.55, "binary": 72.34, "gray": 81.52, "weight_block": 42.65},
    "same_sector_swap": {"strict": 34.83, "v2": 31.92, "binary": 46.11, "gray": 54.93, "weight_block": 12.24},
    "path_orig_w4": {"strict": 2.48, "v2": 39.90, "binary": 56.11, "gray": 66.46, "weight_block": 34.02},
    "path_v2_w4": {"strict": 43.78, "v2": 2.48, "binary": 44.92, "gray": 51.42, "weight_block": 28.79},
    "mix_sector_orig_path": {"strict": 26.51, "v2": 45.22, "binary": 64.23, "gray": 73.99, "weight_block": 38.33},
    "mix_sector_v2_path": {"strict": 47.16, "v2": 26.51, "binary": 58.63, "gray": 66.47, "weight_block": 35.72},
    "local_hopping_1d": {"strict": 33.51, "v2": 22.22, "binary": 18.14, "gray": 36.29, "weight_block": 4.67},
    "local_pair_creation_1d": {"strict": 92.44, "v2": 89.28, "binary": 54.43, "gray": 36.29, "weight_block": 98.51},
}
BANDING_RANDOM = {
    "sector_dense_r1": (85.72, 0.83),
    "same_sector_swap": (85.76, 1.28),
    "path_orig_w4": (85.72, 1.85),
    "path_v2_w4": (85.96, 1.85),
    "mix_sector_orig_path": (85.72, 1.04),
    "mix_sector_v2_path": (85.84, 1.08),
    "local_hopping_1d": (85.32, 2.73),
    "local_pair_creation_1d": (85.36, 2.30),
}
# families whose definitions are fully determined by the published
# construction; the rest are reproduced under documented local definitions
BANDING_DETERMINED_FAMILIES = ("sector_dense_r1", "path_orig_w4", "path_v2_w4")

# A-optimal sensor placement benchmark: driver -> (alpha, epsilon, F, residual)
SENSOR = {
    "tf_only": (None, None, 0.6655, 0.0105),
    "sector_only": (0.0, 0.0, 0.7599, 0.0107),
    "path_only": (1.0, 0.0, 0.2577, 0.0542),
    "sector_path": (0.50, 0.0, 0.7554, 0.0067),
    "hybrid_a": (0.30, 0.10, 0.8019, 0.0068),
    "hybrid_b": (0.50, 0.20, 0.8269, 0.0051),
}

# single-component path-only fidelity depends on the driver window
PATH_ONLY_BY_WINDOW = {4: 0.1739, 8: 0.2490}

# The published argmax points all have epsilon <= 0.10, and every published
# best value is reproduced at its printed cell to ~1e-4, while our larger
# epsilon cells score strictly higher: the published scan evidently used a
# smaller epsilon range.  Argmax comparison therefore happens on the common
# epsilon <= 0.10 slice; near-ties below ARGMAX_TIE_WINDOW (under the
# method's own discretization noise, see the convergence table) count as
# matching.
COMPARISON_EPSILON_MAX = 0.10
ARGMAX_TIE_WINDOW = 5e-4

# calibration gate: baselines that pin (w_T, h) without the hybrid driver
CALIBRATION_TF = 0.8902
CALIBRATION_SECTOR = 0.9455
CALIBRATION_TOL = 0.003
