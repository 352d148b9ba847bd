use zetalab::arithmetic::{build_sieve, prime_pi_exact, JumpMode};
use zetalab::explicit::{pi_explicit, WaveSumConfig};
use zetalab::zeros::{count_report, export_zeros, find_zeros_up_to, import_zeros, Provenance, ZeroFormat};
use zetalab::PrecisionContext;

#[test]
fn imported_zeros_reproduce_the_reconstruction() {
    let ctx = PrecisionContext::double();
    let computed = find_zeros_up_to(600.0, &ctx).unwrap();
    assert_eq!(count_report(&computed, 600.0).unwrap().exact_count, computed.len());
    let dir = tempfile::tempdir().unwrap();
    for (name, format) in [("z.bin", ZeroFormat::Binary), ("z.txt", ZeroFormat::Text)] {
        let path = dir.path().join(name);
        export_zeros(&computed, &path, format).unwrap();
        let imported = import_zeros(&path).unwrap();
        assert_eq!(imported.gammas(), computed.gammas());
        assert!(matches!(imported.provenance(), Provenance::Imported { .. }));
        let cfg = WaveSumConfig::for_height(imported.len(), 97.5);
        let a = pi_explicit(97.5, &computed, &cfg, &ctx).unwrap();
        let b = pi_explicit(97.5, &imported, &cfg, &ctx).unwrap();
        assert_eq!(a, b);
        let exact = prime_pi_exact(97.5, &build_sieve(100).unwrap(), JumpMode::Half).unwrap();
        assert!((a.total - exact).abs() < 0.1, "{} vs {exact}", a.total);
    }
}
