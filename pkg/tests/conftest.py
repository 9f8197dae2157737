from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def grid_descriptors(l_max, sum_max, rho_max, families="AB"):
    """All valid descriptors with l <= l_max, k1+k2 <= sum_max, |rho| <= rho_max."""
    from torusclass.invariants import ManifoldDescriptor

    out = []
    for fam in families:
        for ell in range(1, l_max + 1):
            for rho in range(-rho_max, rho_max + 1):
                for k1 in range(1, sum_max + 1):
                    k2_min = 1 if fam == "A" else 0
                    for k2 in range(k2_min, sum_max - k1 + 1):
                        out.append(ManifoldDescriptor(fam, ell, rho, k1, k2))
    return out
