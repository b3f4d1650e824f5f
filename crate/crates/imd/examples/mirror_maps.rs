//! Tour of the mirror-map machinery: conjugate values, closed-form mirror
//! points, finite-difference agreement, and sampled Lipschitz constants.
//!
//! ```bash
//! cargo run --example mirror_maps
//! ```

use imd::geometry::MirrorMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // Entropic map on the simplex: the mirror point is a softmax.
    let simplex = MirrorMap::entropic_simplex(2);
    let zeta = vec![3.0_f64.ln(), 0.0];
    let p = simplex.primal_point(1.0, &zeta).unwrap();
    println!("entropic simplex, zeta = (ln 3, 0), beta = 1");
    println!(
        "  conjugate value  {:+.6}",
        simplex.conjugate(1.0, &zeta).unwrap()
    );
    println!(
        "  mirror point     ({:.4}, {:.4})  <- softmax(-zeta)",
        p[0], p[1]
    );

    // Euclidean map on a box: the mirror point is a clamped target.
    let boxed = MirrorMap::euclidean_box(vec![-1.0, -1.0], vec![1.0, 1.0]);
    let zeta = vec![-4.0, 1.0];
    let p = boxed.primal_point(2.0, &zeta).unwrap();
    println!("\neuclidean box [-1,1]^2, zeta = (-4, 1), beta = 2");
    println!(
        "  conjugate value  {:+.6}",
        boxed.conjugate(2.0, &zeta).unwrap()
    );
    println!(
        "  mirror point     ({:.4}, {:.4})  <- clamp(-zeta/beta)",
        p[0], p[1]
    );

    // Gradient consistency: central differences of the conjugate match the
    // closed-form gradient.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-6;
    println!("\nfinite-difference check (h = {h:.0e}, 200 samples per geometry)");
    for (name, map) in [
        ("entropic simplex (n=4)", MirrorMap::entropic_simplex(4)),
        (
            "euclidean box (n=4)",
            MirrorMap::euclidean_box(vec![-1.0; 4], vec![1.0; 4]),
        ),
    ] {
        let mut worst = 0.0_f64;
        for _ in 0..200 {
            let beta = 0.5 + 2.5 * rng.random::<f64>();
            let z: Vec<f64> = (0..map.dim())
                .map(|_| rng.random::<f64>() * 4.0 - 2.0)
                .collect();
            let grad = map.conjugate_grad(beta, &z).unwrap();
            for i in 0..map.dim() {
                let mut zp = z.clone();
                let mut zm = z.clone();
                zp[i] += h;
                zm[i] -= h;
                let fd = (map.conjugate(beta, &zp).unwrap() - map.conjugate(beta, &zm).unwrap())
                    / (2.0 * h);
                worst = worst.max(((fd - grad[i]) / grad[i].abs().max(1e-3)).abs());
            }
        }
        println!("  {name:26} max relative error {worst:.3e}");
    }

    // Sampled Lipschitz constants against the 1/(alpha beta) guarantee.
    println!("\nLipschitz probe (10^4 Gaussian pairs per row)");
    println!(
        "  {:26} {:>6} {:>12} {:>12}",
        "geometry", "beta", "sampled", "1/(a*b)"
    );
    for (name, map, beta) in [
        (
            "entropic simplex (n=5)",
            MirrorMap::entropic_simplex(5),
            2.0,
        ),
        (
            "euclidean box (n=3)",
            MirrorMap::euclidean_box(vec![-1.0; 3], vec![1.0; 3]),
            1.0,
        ),
        (
            "euclidean ball (n=3)",
            MirrorMap::euclidean_ball(vec![0.0; 3], 1.0),
            0.5,
        ),
    ] {
        let ratio = map.lipschitz_probe(beta, 10_000, 42).unwrap();
        println!(
            "  {name:26} {beta:>6.2} {ratio:>12.6} {:>12.6}",
            1.0 / (map.alpha() * beta)
        );
    }
}
