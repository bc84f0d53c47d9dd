use sparsecol::graph::Graph;
use std::time::Instant;

fn main() {
    let m = 1048576usize;
    let n = sparsecol::generate::kdegenerate_size_for_edges(2, m);
    let g: Graph = sparsecol::generate::kdegenerate(2, n, 1);
    let t = Instant::now();
    let ord = sparsecol::sparsity::degeneracy_ordering(&g);
    println!("ordering: {:.1} ms (degeneracy {})", t.elapsed().as_secs_f64()*1e3, ord.degeneracy);
    let t = Instant::now();
    let mad = sparsecol::sparsity::mad(&g).unwrap();
    println!("mad {}: {:.1} ms", mad, t.elapsed().as_secs_f64()*1e3);
}
