//! Fixed workloads for the benchmarks in `benches/`.

use acspec_core::groupoids::{lookup, GroupoidSpec};
use acspec_core::spectrum::SpectrumKind;

pub struct Workload {
    pub id: &'static str,
    pub kind: SpectrumKind,
    pub n: usize,
}

impl Workload {
    pub fn groupoid(&self) -> GroupoidSpec {
        lookup(self.id).expect("workloads name catalog entries")
    }

    pub fn label(&self) -> String {
        format!("{}/{}/{}", self.id, self.kind, self.n)
    }
}

/// One workload per fingerprint kind, each well under a second.
pub fn spectrum_workloads() -> Vec<Workload> {
    let w = |id, kind, n| Workload { id, kind, n };
    vec![
        w("nor", SpectrumKind::Ac, 6),
        w("rps-identity", SpectrumKind::Ac, 6),
        w("mean", SpectrumKind::Ac, 6),
        w("plus-zeta3", SpectrumKind::Ac, 6),
        w("cross", SpectrumKind::Ac, 5),
        w("exponentiation", SpectrumKind::Ac, 6),
        w("implication", SpectrumKind::Assoc, 7),
    ]
}
