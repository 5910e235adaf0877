use super::*;
use crate::error::Error;

fn k(n: usize) -> Graph {
    Graph::complete(n)
}

#[test]
fn make_graph_triangle() {
    let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.m(), 3);
    assert!(g.has_edge(2, 0));
}

#[test]
fn make_graph_empty() {
    let g = Graph::new(4, &[]).unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.m(), 0);
}

#[test]
fn make_graph_rejects_self_loop() {
    assert!(matches!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
}

#[test]
fn make_graph_rejects_out_of_range() {
    assert!(matches!(
        Graph::new(2, &[(0, 5)]),
        Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
    ));
}

#[test]
fn make_graph_dedups_edges() {
    let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
    assert_eq!(g.m(), 1);
}

#[test]
fn disjoint_union_two_triangles() {
    let (u, off) = k(3).disjoint_union(&k(3));
    assert_eq!(off, 3);
    assert_eq!(u.n(), 6);
    assert_eq!(u.m(), 6);
    assert!(u.has_edge(3, 4) && !u.has_edge(2, 3));
}

#[test]
fn disjoint_union_identities() {
    let empty = Graph::new(0, &[]).unwrap();
    let (a, _) = empty.disjoint_union(&k(4));
    assert_eq!(a, k(4));
    let (b, _) = k(3).disjoint_union(&empty);
    assert_eq!(b, k(3));
}

#[test]
fn identify_path_midpoints() {
    // a-b, c-d; identifying {b,c} gives a path on 3 vertices.
    let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let (h, map) = g.identify_vertices(&[vec![1, 2]]).unwrap();
    assert_eq!(h.n(), 3);
    assert_eq!(h.m(), 2);
    assert_eq!(map[1], map[2]);
    assert_eq!(h.degree(map[1]), 2);
}

#[test]
fn identify_adjacent_drops_loop() {
    let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let (h, map) = g.identify_vertices(&[vec![0, 1]]).unwrap();
    assert_eq!(h.n(), 2);
    assert_eq!(h.m(), 1);
    assert!(h.has_edge(map[0], map[2]));
}

#[test]
fn identify_nothing_is_identity() {
    let g = Graph::paw();
    let (h, map) = g.identify_vertices(&[]).unwrap();
    assert_eq!(h, g);
    assert_eq!(map, vec![0, 1, 2, 3]);
}

#[test]
fn identify_rejects_overlap() {
    let g = k(3);
    assert!(g.identify_vertices(&[vec![0, 1], vec![1, 2]]).is_err());
}

#[test]
fn blow_up_identity() {
    let g = k(3).blow_up(0, 1).unwrap();
    assert_eq!(g, k(3));
}

#[test]
fn blow_up_k3_vertex_twice_is_k4_minus_edge() {
    // Direct construction check: K_4 minus the edge between the two copies.
    let g = k(3).blow_up(0, 2).unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.m(), 5);
    assert!(!g.has_edge(0, 3));
    let mut expect = Vec::new();
    for u in 0..4usize {
        for v in u + 1..4 {
            if !(u == 0 && v == 3) {
                expect.push((u, v));
            }
        }
    }
    assert_eq!(g, Graph::new(4, &expect).unwrap());
}

#[test]
fn blow_up_edge_endpoint_is_star() {
    let e = Graph::new(2, &[(0, 1)]).unwrap();
    let g = e.blow_up(1, 3).unwrap();
    // Direct construction check: K_{1,3} centered at vertex 0.
    assert_eq!(g.n(), 4);
    assert_eq!(g.m(), 3);
    assert_eq!(g.degree(0), 3);
}

#[test]
fn blow_up_rejects_zero() {
    assert!(matches!(k(3).blow_up(0, 0), Err(Error::ZeroBlowUp)));
}

#[test]
fn blow_up_count_law() {
    // |V| = n-1+t and |E| = |E(g)| + (t-1)*deg(v).
    let g = Graph::paw();
    for v in 0..4 {
        for t in 1..4 {
            let b = g.blow_up(v, t).unwrap();
            assert_eq!(b.n(), g.n() - 1 + t);
            assert_eq!(b.m(), g.m() + (t - 1) * g.degree(v));
        }
    }
}

#[test]
fn copies_k3_in_k4() {
    let copies = enumerate_copies(&k(4), &k(3)).unwrap();
    assert_eq!(copies.len(), 4);
}

#[test]
fn copies_triangle_free() {
    let copies = enumerate_copies(&Graph::cycle(6), &k(3)).unwrap();
    assert!(copies.is_empty());
}

/// Independent reference: count injective homomorphisms by plain nested
/// enumeration over all ordered vertex tuples, divide by |Aut(h)|.
fn reference_copy_count(g: &Graph, h: &Graph) -> usize {
    let auts = automorphisms(h).unwrap().len();
    let mut count = 0usize;
    let mut image = vec![usize::MAX; h.n()];
    fn rec(g: &Graph, h: &Graph, image: &mut Vec<usize>, depth: usize, count: &mut usize) {
        if depth == h.n() {
            *count += 1;
            return;
        }
        'outer: for gv in 0..g.n() {
            for prev in 0..depth {
                if image[prev] == gv {
                    continue 'outer;
                }
                if h.has_edge(depth, prev) && !g.has_edge(gv, image[prev]) {
                    continue 'outer;
                }
            }
            image[depth] = gv;
            rec(g, h, image, depth + 1, count);
        }
    }
    rec(g, h, &mut image, 0, &mut count);
    count / auts
}

#[test]
fn copies_paw_p3_matches_reference() {
    let g = Graph::paw();
    let h = Graph::path(3);
    let copies = enumerate_copies(&g, &h).unwrap();
    assert_eq!(copies.len(), reference_copy_count(&g, &h));
}

#[test]
fn copies_match_reference_on_small_random_graphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let patterns = [k(3), Graph::path(3), Graph::paw(), Graph::cycle(4)];
    for _ in 0..40 {
        let n = rng.gen_range(3..=7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        for h in &patterns {
            let copies = enumerate_copies(&g, h).unwrap();
            assert_eq!(copies.len(), reference_copy_count(&g, h), "n={n} h={}v", h.n());
        }
    }
}

#[test]
fn copies_consistent_under_identification() {
    // Copy counts recomputed from scratch after identification agree with
    // enumerating on the identified graph directly.
    let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let (merged, _) = g.identify_vertices(&[vec![2, 3]]).unwrap();
    let direct = enumerate_copies(&merged, &k(3)).unwrap();
    let rebuilt = Graph::new(
        merged.n(),
        &merged.edges().map(|(a, b)| (a as usize, b as usize)).collect::<Vec<_>>(),
    )
    .unwrap();
    let recomputed = enumerate_copies(&rebuilt, &k(3)).unwrap();
    assert_eq!(direct, recomputed);
    assert_eq!(direct.len(), 2);
}

#[test]
fn automorphism_counts() {
    assert_eq!(automorphisms(&k(3)).unwrap().len(), 6);
    assert_eq!(automorphisms(&k(4)).unwrap().len(), 24);
    assert_eq!(automorphisms(&Graph::cycle(4)).unwrap().len(), 8);
    assert_eq!(automorphisms(&Graph::path(3)).unwrap().len(), 2);
    assert_eq!(automorphisms(&Graph::paw()).unwrap().len(), 2);
}

#[test]
fn pattern_size_limit_enforced() {
    let big = Graph::new(11, &[]).unwrap();
    assert!(matches!(
        enumerate_copies(&Graph::new(12, &[]).unwrap(), &big),
        Err(Error::PatternTooLarge(11, _))
    ));
}

#[test]
fn blocks_of_paw() {
    let dec = Graph::paw().blocks();
    assert_eq!(dec.blocks.len(), 2);
    assert_eq!(dec.cutvertices, vec![2]);
    let mut sizes: Vec<usize> = dec.blocks.iter().map(|b| b.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 3]);
}

#[test]
fn blocks_of_c4() {
    let dec = Graph::cycle(4).blocks();
    assert_eq!(dec.blocks.len(), 1);
    assert_eq!(dec.blocks[0], vec![0, 1, 2, 3]);
    assert!(dec.cutvertices.is_empty());
}

#[test]
fn blocks_of_small_tree() {
    let t = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
    let dec = t.blocks();
    assert_eq!(dec.blocks.len(), 3);
    assert!(dec.blocks.iter().all(|b| b.len() == 2));
    assert_eq!(dec.cutvertices, vec![1]);
}

#[test]
fn blocks_cover_edges_and_overlap_bound() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(2..=9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.35) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let dec = g.blocks();
        // Every edge inside some block.
        for (u, v) in g.edges() {
            assert!(
                dec.blocks
                    .iter()
                    .any(|b| b.contains(&(u as usize)) && b.contains(&(v as usize))),
                "edge ({u},{v}) uncovered"
            );
        }
        // Pairwise intersections have at most one vertex.
        for i in 0..dec.blocks.len() {
            for j in i + 1..dec.blocks.len() {
                let inter = dec.blocks[i].iter().filter(|v| dec.blocks[j].contains(v)).count();
                assert!(inter <= 1);
            }
        }
    }
}

#[test]
fn block_graph_tests() {
    assert!(k(4).is_block_graph());
    assert!(!Graph::cycle(4).is_block_graph());
    assert!(Graph::paw().is_block_graph());
}

/// Independent reference for separators: try all subsets in (size, lex) order.
fn reference_min_separator(g: &Graph, block: &[usize]) -> Option<Vec<usize>> {
    let k = block.len();
    for size in 1..k {
        let mut best: Option<Vec<usize>> = None;
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let sep: Vec<usize> = idx.iter().map(|&i| block[i]).collect();
            let rest: Vec<usize> = block.iter().copied().filter(|v| !sep.contains(v)).collect();
            if rest.len() >= 2 && g.components_within(&rest).len() >= 2 {
                match &best {
                    Some(b) if *b <= sep => {}
                    _ => best = Some(sep),
                }
            }
            let mut i = size;
            let mut done = false;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                if idx[i] != i + k - size {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
            if done {
                break;
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

#[test]
fn min_separator_c4() {
    let g = Graph::cycle(4);
    let sep = g.min_block_separator(&[0, 1, 2, 3]).unwrap();
    assert_eq!(sep, reference_min_separator(&g, &[0, 1, 2, 3]).unwrap());
    assert_eq!(sep.len(), 2);
    assert!(!g.has_edge(sep[0], sep[1]));
}

#[test]
fn min_separator_c5_lex_first() {
    let g = Graph::cycle(5);
    let block: Vec<usize> = (0..5).collect();
    let sep = g.min_block_separator(&block).unwrap();
    assert_eq!(sep, reference_min_separator(&g, &block).unwrap());
    assert_eq!(sep, vec![0, 2]);
}

#[test]
fn min_separator_rejects_clique() {
    assert!(k(4).min_block_separator(&[0, 1, 2, 3]).is_err());
}

#[test]
fn gr_round_trip() {
    let g = Graph::paw();
    let text = to_gr(&g);
    let h = parse_gr(&text).unwrap();
    assert_eq!(g, h);
}

#[test]
fn gr_rejects_malformed_header() {
    assert!(parse_gr("p xyz 3 1\n1 2\n").is_err());
    assert!(parse_gr("1 2\n").is_err());
}

#[test]
fn json_round_trip_keeps_labels() {
    let mut g = Graph::new(2, &[(0, 1)]).unwrap();
    g.set_label(0, "portal:0".into());
    let text = serde_json::to_string(&g).unwrap();
    let h: Graph = serde_json::from_str(&text).unwrap();
    let h = h.rebuild();
    assert_eq!(h.label(0), Some("portal:0"));
    assert!(h.has_edge(0, 1));
}
