//! The continuous inertial method: with `mu_t = t` the optimality gap obeys
//! `gap(t) <= V(x*) / t`. Integrate a quadratic, tabulate `gap * t` against
//! `V(x*)`, and run the trajectory certificates.
//!
//! ```bash
//! cargo run --example continuous_rate
//! ```

use imd::continuous::{
    bound_ratio, integrated_inequality, lyapunov_check, ContinuousSystem, MuMode,
};
use imd::geometry::ConjugatePair;
use imd::oracles::DeterministicProblem;

fn main() {
    let v = [1.0, -2.0, 2.0, -1.0, 3.0_f64];
    let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let x_star: Vec<f64> = v.iter().map(|a| a / norm).collect();
    let problem =
        DeterministicProblem::quadratic_diag(vec![0.5, 1.0, 1.5, 2.0, 3.0], x_star).unwrap();
    let pair = ConjugatePair::Identity;
    let v_star = pair.primal_value(&problem.x_star());
    let system = ContinuousSystem::new(problem, pair, MuMode::Linear).unwrap();
    let traj = system.integrate(100.0, 1e-3, 1e-4).unwrap();

    println!("linear-inertia dynamics on a quadratic in R^5, V(x*) = {v_star:.3}");
    println!(
        "{:>8}  {:>12}  {:>10}  {:>8}",
        "t", "gap", "gap * t", "ratio"
    );
    for &t in &[1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0] {
        let k = traj.index_at(t);
        let (tk, gap) = (traj.times()[k], traj.gap_path()[k]);
        println!(
            "{:>8.1}  {:>12.6e}  {:>10.6}  {:>8.4}",
            tk,
            gap,
            gap * tk,
            gap * tk / v_star
        );
    }

    let worst = bound_ratio(&traj, v_star, 1.0);
    println!("\nworst gap*t/V(x*) over t >= 1: {worst:.6} (the guarantee is <= 1)");
    let lyap = lyapunov_check(&traj, &system).unwrap();
    println!("Lyapunov descent violation:    {lyap:.3e} (negative = holds with margin)");
    let integrated = integrated_inequality(&traj, &system).unwrap();
    println!("integrated inequality excess:  {integrated:.3e}");
}
