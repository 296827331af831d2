use intpoly_cli::sample::rng_for;
use intpoly_cli::suites::{trial_cutting, trial_partition};
use std::time::Instant;

fn main() {
    for index in 0..4u64 {
        let t = Instant::now();
        let mut rng = rng_for(202, index);
        trial_cutting(&mut rng, 3, 3).unwrap();
        let cut_t = t.elapsed().as_secs_f64();
        let t = Instant::now();
        trial_partition(&mut rng, 3, 3).unwrap();
        println!(
            "trial {index}: cut {cut_t:.2}s partition {:.2}s",
            t.elapsed().as_secs_f64()
        );
    }
}
