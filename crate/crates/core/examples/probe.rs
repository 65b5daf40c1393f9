use oddcolor::coloring::*;
use oddcolor::constructions::*;
fn main() {
    for (m, d) in [
        (2usize, 6usize),
        (2, 5),
        (2, 4),
        (3, 3),
        (3, 2),
        (5, 2),
        (19, 1),
        (1, 38),
    ] {
        let t = std::time::Instant::now();
        let sg =
            schrijver_graph(SchrijverParams::new(m, d).unwrap(), DEFAULT_SCHRIJVER_CAP).unwrap();
        let r = exact_chromatic(&sg.graph, DEFAULT_BUDGET);
        println!(
            "({m},{d}) v={} chi={:?} {:?}",
            sg.graph.vertex_count(),
            r.exact(),
            t.elapsed()
        );
    }
}
