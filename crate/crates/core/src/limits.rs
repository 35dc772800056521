//! Resource bounds with environment overrides.
//!
//! Every bound guards an enumeration that is exponential in its argument, so
//! exceeding one is reported as a resource error rather than attempted.
//! Each can be raised or lowered through the named environment variable.

fn env_limit(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Ambient variable cap for the subset sweep behind Betti table computation.
/// Override with `HOCHSTER_MAX_SWEEP_VARS`.
pub fn max_sweep_vars() -> usize {
    env_limit("HOCHSTER_MAX_SWEEP_VARS", 24)
}

/// Cap on polarized ambient size accepted by `betti_monomial`.
/// Override with `HOCHSTER_MAX_POLARIZED_VARS`.
pub fn max_polarized_vars() -> usize {
    env_limit("HOCHSTER_MAX_POLARIZED_VARS", 24)
}

/// Generator cap for the inclusion-exclusion Hilbert numerator.
/// Override with `HOCHSTER_MAX_HILBERT_GENERATORS`.
pub fn max_hilbert_generators() -> usize {
    env_limit("HOCHSTER_MAX_HILBERT_GENERATORS", 20)
}

/// Cap on the number of monomials or faces any single enumeration may visit.
/// Override with `HOCHSTER_MAX_ENUMERATION`.
pub fn max_enumeration() -> usize {
    env_limit("HOCHSTER_MAX_ENUMERATION", 20_000_000)
}
