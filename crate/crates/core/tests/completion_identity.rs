mod common;

use chromatic_sudoku::{
    assemble_polynomial, count_completions_brute, count_consistent_partitions,
    interpolate_from_oracle, validate_coloring, BigInt, Graph, PartialChromaticPolynomial,
    PartialColoring, Polynomial,
};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn partitions_poly(g: &Graph, c: &PartialColoring) -> Polynomial {
    assemble_polynomial(c.lambda0(), count_consistent_partitions(g, c).unwrap()).unwrap()
}

fn brute(g: &Graph, c: &PartialColoring, lambda: u64) -> BigInt {
    count_completions_brute(g, c, lambda).unwrap()
}

#[test]
fn spec_partition_examples_match_definition() {
    let edge = Graph::new(2, [(1, 2)]).unwrap();
    assert_eq!(
        m_by_definition(&edge, &PartialColoring::empty(2)),
        vec![0, 0, 1]
    );
    let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
    assert_eq!(
        m_by_definition(&path, &PartialColoring::empty(3)),
        vec![0, 0, 1, 1]
    );
    let k3 = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    let c = validate_coloring(&k3, [(1, 1)]).unwrap();
    assert_eq!(m_by_definition(&k3, &c), vec![0, 0, 1]);
}

#[test]
fn restricted_growth_matches_definition_exhaustively() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=5 {
        for g in all_graphs(n) {
            for _ in 0..3 {
                let c = random_coloring(&mut rng, &g);
                let fast: Vec<i64> = count_consistent_partitions(&g, &c).unwrap();
                assert_eq!(fast, m_by_definition(&g, &c), "{g:?} {c:?}");
            }
        }
    }
}

#[test]
fn falling_factorial_sum_counts_completions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let c = random_coloring(&mut rng, &g);
        let m: Vec<i64> = count_consistent_partitions(&g, &c).unwrap();
        assert_eq!(m.len(), n - c.colored_count() + 1);
        assert_eq!(*m.last().unwrap(), 1, "top coefficient");
        let l0 = c.lambda0();
        for lambda in l0..=l0 + n + 2 {
            let sum: i128 = m
                .iter()
                .enumerate()
                .map(|(r, &mr)| mr as i128 * falling((lambda - l0) as i128, r))
                .sum();
            assert_eq!(
                BigInt::from(sum),
                brute(&g, &c, lambda as u64),
                "{g:?} {c:?} λ={lambda}"
            );
        }
    }
}

#[test]
fn relabelling_colors_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let raw = random_raw_coloring(&mut rng, &g);
        let shift: u64 = rng.gen_range(1..100);
        let mut labels: Vec<u64> = raw.iter().map(|&(_, l)| l).collect();
        labels.sort_unstable();
        labels.dedup();
        let perm: Vec<u64> = labels.iter().rev().map(|l| l + shift).collect();
        let relabelled: Vec<(usize, u64)> = raw
            .iter()
            .map(|&(v, l)| (v, perm[labels.iter().position(|&x| x == l).unwrap()]))
            .collect();
        let a = validate_coloring(&g, raw).unwrap();
        let b = validate_coloring(&g, relabelled).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            count_consistent_partitions::<i64>(&g, &a).unwrap(),
            count_consistent_partitions::<i64>(&g, &b).unwrap()
        );
    }
}

#[test]
fn empty_coloring_gives_chromatic_polynomial() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let c = PartialColoring::empty(n);
            let p = partitions_poly(&g, &c);
            assert_eq!(p.degree(), n);
            for lambda in 0..=n as i64 + 2 {
                assert_eq!(p.evaluate(lambda).unwrap(), brute(&g, &c, lambda as u64));
                assert_eq!(
                    p.evaluate_monomial(lambda).unwrap(),
                    brute(&g, &c, lambda as u64)
                );
            }
        }
    }
}

#[test]
fn fully_colored_is_constant_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        // greedy full coloring
        let mut colors = vec![0u64; n + 1];
        for v in 1..=n {
            colors[v] = (1..)
                .find(|&k| g.neighbors(v).iter().all(|&w| colors[w] != k))
                .unwrap();
        }
        let c = validate_coloring(&g, (1..=n).map(|v| (v, colors[v]))).unwrap();
        assert_eq!(count_consistent_partitions::<i64>(&g, &c).unwrap(), vec![1]);
        for lambda in c.lambda0()..c.lambda0() + 4 {
            assert_eq!(brute(&g, &c, lambda as u64), BigInt::from(1));
        }
    }
}

#[test]
fn two_routes_agree_in_both_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..250 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let c = random_coloring(&mut rng, &g);
        let direct = partitions_poly(&g, &c);
        let interp =
            interpolate_from_oracle(&g, &c, |l| count_completions_brute(&g, &c, l)).unwrap();
        assert_eq!(direct.falling_coeffs(), interp.falling_coeffs());
        assert_eq!(direct.monomial_coeffs(), interp.monomial_coeffs());
        assert_eq!(direct.degree(), n - c.colored_count());
        assert!(direct.is_monic());
        let l0 = c.lambda0() as i64;
        for lambda in l0..=l0 + direct.degree() as i64 + 3 {
            assert_eq!(direct.evaluate(lambda), direct.evaluate_monomial(lambda));
        }
    }
}

#[test]
fn scalar_types_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.4);
        let c = random_coloring(&mut rng, &g);
        let p64 = assemble_polynomial(
            c.lambda0(),
            count_consistent_partitions::<i64>(&g, &c).unwrap(),
        )
        .unwrap();
        let p128 = assemble_polynomial(
            c.lambda0(),
            count_consistent_partitions::<i128>(&g, &c).unwrap(),
        )
        .unwrap();
        let big = partitions_poly(&g, &c);
        let as_big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(as_big(p64.monomial_coeffs()), big.monomial_coeffs());
        assert_eq!(
            p128.monomial_coeffs()
                .iter()
                .map(|&x| BigInt::from(x))
                .collect::<Vec<_>>(),
            big.monomial_coeffs()
        );
    }
}

fn tree_expected(k: usize) -> Polynomial {
    // λ(λ-1)^{k-1} as monomials, via samples
    let samples: Vec<BigInt> = (0..=k as i64)
        .map(|l| BigInt::from(l) * BigInt::from(l - 1).pow(k as u32 - 1))
        .collect();
    PartialChromaticPolynomial::from_samples(0, &samples).unwrap()
}

fn cycle_expected(k: usize) -> Polynomial {
    let samples: Vec<BigInt> = (0..=k as i64)
        .map(|l| {
            BigInt::from(l - 1).pow(k as u32)
                + BigInt::from(if k.is_multiple_of(2) { 1 } else { -1 }) * (l - 1)
        })
        .collect();
    PartialChromaticPolynomial::from_samples(0, &samples).unwrap()
}

#[test]
fn trees_and_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for k in 1..=6 {
        // random labelled tree: attach each vertex to an earlier one
        let edges: Vec<_> = (2..=k).map(|v| (rng.gen_range(1..v), v)).collect();
        let tree = Graph::new(k, edges).unwrap();
        let c = PartialColoring::empty(k);
        let expected = tree_expected(k);
        for l in 0..=k as i64 + 2 {
            assert_eq!(expected.evaluate(l).unwrap(), brute(&tree, &c, l as u64));
        }
        assert_eq!(partitions_poly(&tree, &c), expected);
    }
    for k in 3..=6 {
        let cycle = Graph::new(k, (1..=k).map(|v| (v, v % k + 1))).unwrap();
        let c = PartialColoring::empty(k);
        let expected = cycle_expected(k);
        for l in 0..=k as i64 + 2 {
            assert_eq!(expected.evaluate(l).unwrap(), brute(&cycle, &c, l as u64));
        }
        assert_eq!(partitions_poly(&cycle, &c), expected);
    }
}

#[test]
fn shidoku_count() {
    let g = chromatic_sudoku::sudoku_graph(2, false).unwrap();
    let c = PartialColoring::empty(16);
    let p = partitions_poly(&g, &c);
    assert_eq!(p.evaluate(4).unwrap(), BigInt::from(288));
    assert_eq!(brute(&g, &c, 4), BigInt::from(288));
    // 12 unlabelled 4-block partitions, 24 ways to name the colors
    assert_eq!(p.falling_coeffs()[4], BigInt::from(12));
}
