use intpoly::geometry::face_lattice;
use intpoly::group::face_euler_characteristic;
use intpoly_cli::sample::{random_polytope, rng_for};
use std::time::Instant;

fn main() {
    let mut rng = rng_for(102, 0);
    let p = random_polytope(&mut rng, 3, 5);
    println!("verts={} dim={}", p.vertices().len(), p.dim());
    let t = Instant::now();
    let faces = face_lattice(&p);
    println!("lattice: {} faces in {:.2}s", faces.len(), t.elapsed().as_secs_f64());
    let t = Instant::now();
    let chi = face_euler_characteristic(&p);
    println!(
        "chi collapse in {:.2}s: pos verts={} neg verts={}",
        t.elapsed().as_secs_f64(),
        chi.positive().vertices().len(),
        chi.negative().vertices().len()
    );
}
