use regdom_core::generate::{enumerate_connected_regular, EnumSpec};
use std::time::Instant;
fn main() {
    for (k, ns) in [(3, 4..=14), (4, 5..=11), (5, 6..=10), (6, 7..=11)] {
        for n in ns {
            if n * k % 2 == 1 { continue; }
            let t = Instant::now();
            let c = enumerate_connected_regular(&EnumSpec::connected(n, k)).unwrap().len();
            println!("k={k} n={n} count={c} {:?}", t.elapsed());
        }
    }
}
