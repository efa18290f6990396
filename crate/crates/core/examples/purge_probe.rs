use std::time::Instant;
use wilson_codes::qc::{enumerate_cycles, purge_cycles_with, violations, PurgeOptions};
use wilson_codes::wilson::{build_wilson, WilsonParams};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let qc: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(210);
    let restarts: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(8);
    let b = build_wilson(&WilsonParams::new(2, 9, 4).unwrap()).unwrap();
    let cycles = enumerate_cycles(&b, 6).unwrap();
    let mut ok = 0;
    let start = Instant::now();
    for seed in 0..10u64 {
        let t = Instant::now();
        let opts = PurgeOptions { forbid6: true, seed, max_restarts: restarts };
        match purge_cycles_with(&b, qc, &opts) {
            Ok(e) => {
                let v = violations(&e, &cycles);
                assert!(v.four.is_empty() && v.six.is_empty());
                ok += 1;
                println!("seed {seed}: ok {:?}", t.elapsed());
            }
            Err(_) => println!("seed {seed}: fail {:?}", t.elapsed()),
        }
    }
    println!("qc={qc}: {ok}/10 in {:?}", start.elapsed());
}
