use minorgap_core::{edge_spectrum_with, standard_graph, EnumOptions, ForbiddenSet, StandardKind};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let f = ForbiddenSet::single(standard_graph(StandardKind::Complete, &[5]).unwrap()).unwrap();
    let t = std::time::Instant::now();
    let s = edge_spectrum_with(n, &f, &EnumOptions::default()).unwrap();
    println!("n={n} spectrum={:?} gap={} in {:.1?}", s.spectrum, s.gap, t.elapsed());
    for (e, w) in &s.witnesses {
        println!("  {e}\t{w}");
    }
}
