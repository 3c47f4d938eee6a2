use super::encoding::{neg, pos, var_of, Encoding, Lit};

const UNSET: u8 = 0;
const TRUE: u8 = 1;
const FALSE: u8 = 2;

pub enum SearchResult {
    /// Presence value of every variable.
    Sat(Vec<bool>),
    Unsat,
    Undecided,
}

/// Backtracking over absence subsets with watched-literal unit
/// propagation and factor-interchangeability pruning.
pub struct Search<'a> {
    enc: &'a Encoding,
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<u32>>,
    value: Vec<u8>,
    trail: Vec<Lit>,
    qhead: usize,
    order: Vec<usize>,
    pub nodes: u64,
    budget: Option<u64>,
}

impl<'a> Search<'a> {
    pub fn new(enc: &'a Encoding, budget: Option<u64>) -> Self {
        let nv = enc.num_vars();
        let mut s = Search {
            enc,
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * nv],
            value: vec![UNSET; nv],
            trail: Vec::new(),
            qhead: 0,
            order: enc.branch_order(),
            nodes: 0,
            budget,
        };
        s.clauses = enc.clauses.clone();
        for (ci, c) in s.clauses.iter().enumerate().filter(|(_, c)| c.len() >= 2) {
            for &l in &c[..2] {
                s.watches[l as usize].push(ci as u32);
            }
        }
        s
    }

    fn lit_value(&self, l: Lit) -> u8 {
        let v = self.value[(l >> 1) as usize];
        if v == UNSET || l & 1 == 0 {
            v
        } else {
            3 - v
        }
    }

    /// Makes `l` true; false if it is already false.
    fn enqueue(&mut self, l: Lit) -> bool {
        match self.lit_value(l) {
            TRUE => true,
            FALSE => false,
            _ => {
                self.value[(l >> 1) as usize] = if l & 1 == 0 { TRUE } else { FALSE };
                self.trail.push(l);
                true
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let falsified = self.trail[self.qhead] ^ 1;
            self.qhead += 1;
            let mut ws = std::mem::take(&mut self.watches[falsified as usize]);
            let mut i = 0;
            let mut ok = true;
            while i < ws.len() {
                let ci = ws[i] as usize;
                let c = &mut self.clauses[ci];
                if c[0] == falsified {
                    c.swap(0, 1);
                }
                let first = c[0];
                let first_val = {
                    let v = self.value[(first >> 1) as usize];
                    if v == UNSET || first & 1 == 0 {
                        v
                    } else {
                        3 - v
                    }
                };
                if first_val == TRUE {
                    i += 1;
                    continue;
                }
                let mut moved = false;
                for j in 2..c.len() {
                    let l = c[j];
                    let v = self.value[(l >> 1) as usize];
                    let lv = if v == UNSET || l & 1 == 0 { v } else { 3 - v };
                    if lv != FALSE {
                        c.swap(1, j);
                        self.watches[c[1] as usize].push(ci as u32);
                        ws.swap_remove(i);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                // clause is unit on `first` or conflicting
                if !self.enqueue(first) {
                    ok = false;
                    break;
                }
                i += 1;
            }
            let rest = std::mem::take(&mut self.watches[falsified as usize]);
            ws.extend(rest);
            self.watches[falsified as usize] = ws;
            if !ok {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for &l in &self.trail[mark..] {
            self.value[(l >> 1) as usize] = UNSET;
        }
        self.trail.truncate(mark);
        self.qhead = mark;
    }

    pub fn run(&mut self) -> SearchResult {
        // unit clauses are not watched
        for ci in 0..self.clauses.len() {
            if self.clauses[ci].len() == 1 {
                let l = self.clauses[ci][0];
                if !self.enqueue(l) {
                    return SearchResult::Unsat;
                }
            }
        }
        if !self.propagate() {
            return SearchResult::Unsat;
        }
        let classes = vec![(0..self.enc.k).collect::<Vec<usize>>()];
        match self.descend(0, &classes) {
            Some(true) => SearchResult::Sat(self.value.iter().map(|&v| v == TRUE).collect()),
            Some(false) => SearchResult::Unsat,
            None => SearchResult::Undecided,
        }
    }

    /// Subset `s` (as a factor bitmask) meets every class in a prefix.
    fn canonical(s: u32, classes: &[Vec<usize>]) -> bool {
        classes.iter().all(|c| {
            let t = c.iter().take_while(|&&i| s >> i & 1 == 1).count();
            c[t..].iter().all(|&i| s >> i & 1 == 0)
        })
    }

    fn descend(&mut self, level: usize, classes: &[Vec<usize>]) -> Option<bool> {
        if level == self.order.len() {
            return Some(true);
        }
        let k = self.enc.k;
        let e = self.order[level];
        for s in 1u32..(1 << k) {
            if !Self::canonical(s, classes) {
                continue;
            }
            let consistent = (0..k).all(|i| {
                let absent = s >> i & 1 == 1;
                let v = self.value[var_of(k, e, i) as usize];
                v == UNSET || (v == FALSE) == absent
            });
            if !consistent {
                continue;
            }
            if self.budget.is_some_and(|b| self.nodes >= b) {
                return None;
            }
            self.nodes += 1;
            let mark = self.trail.len();
            let mut ok = true;
            for i in 0..k {
                let v = var_of(k, e, i);
                let l = if s >> i & 1 == 1 { neg(v) } else { pos(v) };
                if !self.enqueue(l) {
                    ok = false;
                    break;
                }
            }
            if ok && self.propagate() {
                let refined: Vec<Vec<usize>> = classes
                    .iter()
                    .flat_map(|c| {
                        let (a, b): (Vec<usize>, Vec<usize>) =
                            c.iter().partition(|&&i| s >> i & 1 == 1);
                        [a, b]
                    })
                    .filter(|c| !c.is_empty())
                    .collect();
                match self.descend(level + 1, &refined) {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.undo(mark);
        }
        Some(false)
    }
}
