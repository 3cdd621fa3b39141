use criterion::{black_box, criterion_group, criterion_main, Criterion};

use conjstab_core::corpus::corpus;
use conjstab_core::oracle::{brute_stability_witness, BallSpec};
use conjstab_core::{decide_stability, Alphabet, Subgroup};

fn decide(c: &mut Criterion) {
    let ab = Alphabet::standard(2).unwrap();
    let cases = corpus(&ab, 2, 3).unwrap();
    c.bench_function("decide/corpus_2_3", |b| {
        b.iter(|| {
            for case in &cases {
                black_box(decide_stability(&case.subgroup));
            }
        })
    });
    let pair = Subgroup::new(&ab, vec![ab.parse_word("aa").unwrap(), ab.parse_word("baaB").unwrap()]).unwrap();
    c.bench_function("decide/aa_baaB", |b| b.iter(|| decide_stability(black_box(&pair))));
    let spec = BallSpec::new(ab.clone(), 4).unwrap();
    c.bench_function("oracle/aa_baaB_r4", |b| {
        b.iter(|| brute_stability_witness(black_box(&pair), &spec).unwrap())
    });
}

criterion_group!(benches, decide);
criterion_main!(benches);
