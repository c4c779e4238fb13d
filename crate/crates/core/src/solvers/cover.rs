use super::{max_weighted_matching, WeightedHypergraph, COMPONENT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverOutcome {
    pub value: u32,
    /// Some component exceeded the cap and contributed its matching value
    /// instead of its exact cover.
    pub capped: bool,
}

/// Minimum total of nonnegative integer vertex values such that every edge
/// and hyperedge has endpoint values summing to at least its weight.
///
/// With `strengthened`, values are restricted to even numbers. That encodes
/// the tile-puzzle parity rule: a tile's extra moves beyond its Manhattan
/// distance come in pairs, so a weight-2 edge needs one endpoint at 2 or
/// more rather than 1 + 1.
///
/// Components are solved independently and summed.
pub fn min_weighted_cover(h: &WeightedHypergraph, strengthened: bool, cap: Option<usize>) -> CoverOutcome {
    let cap = cap.unwrap_or(COMPONENT_CAP);
    let mut out = CoverOutcome {
        value: 0,
        capped: false,
    };
    for comp in h.components() {
        if comp.vertices.len() <= cap {
            out.value += exact_component(&comp.graph, strengthened);
        } else {
            out.capped = true;
            out.value += max_weighted_matching(&comp.graph, Some(cap)).value;
        }
    }
    out
}

struct Constraint {
    vertices: Vec<usize>,
    weight: u32,
}

fn exact_component(g: &WeightedHypergraph, even: bool) -> u32 {
    let n = g.vertex_count;
    // Branch on high-degree vertices first.
    let mut degree = vec![0usize; n];
    for (vs, _) in &g.edges {
        vs.iter().for_each(|&v| degree[v] += 1);
    }
    for (vs, _) in &g.hyperedges {
        vs.iter().for_each(|&v| degree[v] += 1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }

    let round = |x: u32| if even { x + (x & 1) } else { x };
    let max_value: Vec<u32> = {
        let m = g.max_incident_weight();
        order.iter().map(|&v| round(m[v])).collect()
    };

    // Each constraint is checked when its last vertex (in branching order)
    // gets a value.
    let mut closing: Vec<Vec<Constraint>> = (0..n).map(|_| Vec::new()).collect();
    let mut add = |vs: &[usize], weight: u32| {
        let local: Vec<usize> = vs.iter().map(|&v| position[v]).collect();
        let last = *local.iter().max().unwrap();
        closing[last].push(Constraint {
            vertices: local,
            weight,
        });
    };
    for (vs, w) in &g.edges {
        add(vs, *w);
    }
    for (vs, w) in &g.hyperedges {
        add(vs, *w);
    }

    struct Search<'a> {
        closing: &'a [Vec<Constraint>],
        max_value: &'a [u32],
        step: u32,
        even: bool,
        values: Vec<u32>,
        best: u32,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, sum: u32) {
            if sum >= self.best {
                return;
            }
            if i == self.values.len() {
                self.best = sum;
                return;
            }
            let mut need = 0u32;
            for c in &self.closing[i] {
                let others: u32 = c
                    .vertices
                    .iter()
                    .filter(|&&v| v != i)
                    .map(|&v| self.values[v])
                    .sum();
                need = need.max(c.weight.saturating_sub(others));
            }
            if self.even {
                need += need & 1;
            }
            let mut v = need;
            while v <= self.max_value[i].max(need) {
                if sum + v >= self.best {
                    break;
                }
                self.values[i] = v;
                self.go(i + 1, sum + v);
                v += self.step;
            }
            self.values[i] = 0;
        }
    }

    // Every vertex at its maximum incident weight is feasible.
    let feasible: u32 = max_value.iter().sum();
    let mut s = Search {
        closing: &closing,
        max_value: &max_value,
        step: if even { 2 } else { 1 },
        even,
        values: vec![0; n],
        best: feasible + 1,
    };
    s.go(0, 0);
    s.best.min(feasible)
}
