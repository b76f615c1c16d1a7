mod common;

use graph_boundary::generators::{
    complete, cycle, grid, grid_d, hypercube, path, random_tree, star, Family,
};
use graph_boundary::{boundary, boundary_slice, cejz_boundary, DistanceMatrix, Graph};

use common::oracle;

fn agrees_with_oracle(g: &Graph) {
    let report = boundary(g).unwrap();
    let o = oracle(g);
    assert_eq!(report.boundary, o.boundary);
    assert_eq!(report.cejz_boundary, o.cejz);
    for slice in &report.slices {
        assert_eq!(
            slice.members, o.slices[slice.source],
            "slice of {}",
            slice.source
        );
    }
    let dm = DistanceMatrix::compute(g).unwrap();
    for u in 0..g.n() {
        for v in 0..g.n() {
            assert_eq!(u64::from(dm.get(u, v)), o.dist[u][v]);
        }
    }
}

#[test]
fn square_grids_have_rim_and_corners() {
    for n in 3..=6 {
        let g = grid(n, n).unwrap().graph;
        agrees_with_oracle(&g);
        let report = boundary(&g).unwrap();
        assert_eq!(report.boundary.len(), 4 * n - 4);
        assert_eq!(report.cejz_boundary, vec![0, n - 1, n * (n - 1), n * n - 1]);
    }
}

// Reference values below were computed with an independent networkx script.

#[test]
fn corner_slice_of_five_by_five() {
    let g = grid(5, 5).unwrap().graph;
    let dm = DistanceMatrix::compute(&g).unwrap();
    let corner = boundary_slice(&g, &dm.field(0));
    assert_eq!(corner.members, vec![9, 14, 19, 21, 22, 23, 24]);
    assert!(corner.members.iter().all(|&u| g.degree(u) < 4));
    let centre = boundary_slice(&g, &dm.field(12));
    assert_eq!(
        centre.members,
        vec![0, 1, 3, 4, 5, 9, 15, 19, 20, 21, 23, 24]
    );
}

#[test]
fn five_cycle_slices() {
    let g = cycle(5).unwrap();
    let dm = DistanceMatrix::compute(&g).unwrap();
    let expected = [[2, 3], [3, 4], [0, 4], [0, 1], [1, 2]];
    for (v, want) in expected.iter().enumerate() {
        assert_eq!(boundary_slice(&g, &dm.field(v)).members, want.to_vec());
    }
    assert_eq!(boundary(&g).unwrap().boundary, vec![0, 1, 2, 3, 4]);
}

#[test]
fn complete_graph_is_all_boundary() {
    assert_eq!(
        cejz_boundary(&complete(4).unwrap()).unwrap(),
        vec![0, 1, 2, 3]
    );
    assert_eq!(
        boundary(&complete(4).unwrap()).unwrap().boundary,
        vec![0, 1, 2, 3]
    );
}

#[test]
fn star_slice_from_a_leaf() {
    let g = star(4).unwrap();
    let dm = DistanceMatrix::compute(&g).unwrap();
    assert_eq!(boundary_slice(&g, &dm.field(1)).members, vec![2, 3, 4]);
    assert_eq!(boundary(&g).unwrap().boundary, vec![1, 2, 3, 4]);
}

#[test]
fn paths_have_two_endpoints() {
    for n in [2, 3, 7, 20] {
        let g = path(n).unwrap();
        agrees_with_oracle(&g);
        assert_eq!(boundary(&g).unwrap().boundary, vec![0, n - 1]);
    }
}

#[test]
fn assorted_families_match_oracle() {
    agrees_with_oracle(&hypercube(3).unwrap());
    agrees_with_oracle(&hypercube(4).unwrap());
    agrees_with_oracle(&grid_d(&[3, 3, 3]).unwrap().graph);
    agrees_with_oracle(&cycle(8).unwrap());
    for spec in [
        ("lshape", "1,0.5,0.15"),
        ("disk", "1,0.3"),
        ("annulus", "0.4,1.0,0.2"),
        ("slitdisk", "1,0.2"),
    ] {
        let built = Family::parse(spec.0, spec.1).unwrap().build(0).unwrap();
        agrees_with_oracle(&built.graph);
    }
    for seed in 0..5 {
        let g = Family::parse("er", "18,0.35").unwrap().build(seed);
        if let Ok(built) = g {
            if graph_boundary::is_connected(&built.graph) {
                agrees_with_oracle(&built.graph);
            }
        }
    }
}

#[test]
fn hypercube_boundary_is_everything() {
    // Every vertex of Q_d has an antipode, which certifies it.
    let report = boundary(&hypercube(4).unwrap()).unwrap();
    assert_eq!(report.boundary.len(), 16);
    assert_eq!(report.cejz_boundary.len(), 16);
}

#[test]
fn seeded_tree_boundary_is_leaf_set() {
    let tree = random_tree(50, 7).unwrap();
    assert_eq!(boundary(&tree).unwrap().boundary, common::degree_one(&tree));
    agrees_with_oracle(&tree);
}

#[test]
fn ten_by_ten_passes_every_check() {
    use graph_boundary::inequality::inequality_report;
    use graph_boundary::verify::{verify_graph, Check};

    let g = grid(10, 10).unwrap().graph;
    let report = boundary(&g).unwrap();
    assert_eq!(report.boundary.len(), 36);
    assert_eq!(report.cejz_boundary, vec![0, 9, 90, 99]);
    assert!(inequality_report(&g).unwrap().pass());
    assert!(verify_graph(&g, &Check::ALL, None).unwrap().pass());
}
