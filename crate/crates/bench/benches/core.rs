use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sharp_bench::{genfuns, nets};
use sharp_core::order::{order_compare, q_positivity, scalar_ball_member, BallSpec};
use sharp_core::rational::int;
use sharp_core::sampled::{estimate_valuation, falsify_order, oscillating_preset, Direction, GridConfig};
use sharp_core::topology::vnp;
use sharp_core::{axiom_check, Axiom, Basis, Model, SampledNet};

fn scalar(c: &mut Criterion) {
    let xs = nets(1, 64, Model::Full);
    let ys = nets(2, 64, Model::Full);
    c.bench_function("q_positivity/full/64", |b| {
        b.iter(|| xs.iter().map(|x| q_positivity(black_box(x))).collect::<Vec<_>>())
    });
    c.bench_function("order_compare/full/64", |b| {
        b.iter(|| xs.iter().zip(&ys).map(|(x, y)| order_compare(x, y).unwrap()).collect::<Vec<_>>())
    });
    let ball = BallSpec::new(Model::Full, int(1));
    c.bench_function("scalar_ball_member/full/64", |b| {
        b.iter(|| xs.iter().map(|x| scalar_ball_member(x, &ball).unwrap()).collect::<Vec<_>>())
    });
}

fn functions(c: &mut Criterion) {
    let fs = genfuns(3, 32);
    c.bench_function("seminorm/32", |b| b.iter(|| fs.iter().map(|f| f.seminorm(1, 2)).collect::<Vec<_>>()));
    c.bench_function("ball_member/32", |b| b.iter(|| fs.iter().map(|f| f.ball_member(1, 2, &int(0))).collect::<Vec<_>>()));
    c.bench_function("vnp/32", |b| b.iter(|| fs.iter().map(|f| vnp(f, 2, 2)).collect::<Vec<_>>()));
}

fn sampled(c: &mut Criterion) {
    let grid = GridConfig::default();
    let x = SampledNet::from_exact(&nets(4, 1, Model::Simplified)[0]);
    c.bench_function("estimate_valuation/exact", |b| b.iter(|| estimate_valuation(&x, &grid, None)));
    let (net, schedule) = oscillating_preset();
    let mut g = c.benchmark_group("oscillating");
    g.sample_size(10);
    g.bench_function("falsify_order", |b| {
        b.iter(|| falsify_order(&net, Direction::Geq0, &grid.b_list, &schedule, &grid))
    });
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("axiom_check");
    g.sample_size(10);
    for basis in Basis::ALL {
        g.bench_function(format!("{basis}/AV'_I/100"), |b| b.iter(|| axiom_check(basis, Axiom::AvI, 100, 7)));
    }
    g.finish();
}

criterion_group!(benches, scalar, functions, sampled, suites);
criterion_main!(benches);
