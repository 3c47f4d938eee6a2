use std::fmt::Write;

use super::encoding::{neg, var_of, Encoding};
use crate::graph::Graph;
use crate::representation::Family;

/// DIMACS CNF over the variables "non-edge `e` present in factor `i`".
///
/// Variable `e * k + i + 1` belongs to the `e`-th non-edge (sorted order)
/// and factor `i` (0-based); a `c var` comment line lists each one. The
/// formula is satisfiable iff `g` is the intersection of `k` graphs of
/// `family`. With `break_symmetry`, one extra unit clause puts the
/// highest-scoring non-edge outside factor 0, which preserves
/// satisfiability since factors can be permuted.
pub fn write_dimacs(g: &Graph, family: Family, k: usize, break_symmetry: bool) -> String {
    let enc = Encoding::new(g, family, k);
    let mut clauses = enc.clauses.clone();
    if break_symmetry {
        if let Some(&e) = enc.branch_order().first() {
            clauses.push(vec![neg(var_of(k, e, 0))]);
        }
    }
    let mut out = String::new();
    writeln!(out, "c family {} factors {} vertices {}", family, k, g.n()).unwrap();
    for (e, &(u, v)) in enc.non_edges.iter().enumerate() {
        for i in 0..k {
            writeln!(
                out,
                "c var {} non-edge {} {} factor {}",
                var_of(k, e, i) + 1,
                u,
                v,
                i
            )
            .unwrap();
        }
    }
    writeln!(out, "p cnf {} {}", enc.num_vars(), clauses.len()).unwrap();
    for c in &clauses {
        for &l in c {
            let v = (l >> 1) as i64 + 1;
            write!(out, "{} ", if l & 1 == 1 { -v } else { v }).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
