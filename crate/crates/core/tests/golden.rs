use std::path::PathBuf;

use f1rep::colored::gamma_of;
use f1rep::enumerate::embed_l2;
use f1rep::quiver::loop_quiver;
use f1rep::rep::is_indecomposable;
use f1rep::Representation;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn two_loop_example_dot() {
    let v: Representation = serde_json::from_str(&fixture("gamma_v.json")).unwrap();
    assert_eq!(v.quiver(), &loop_quiver(2));
    assert_eq!(gamma_of(&v).to_dot(), fixture("gamma_v.dot"));
}

#[test]
fn kronecker_embedding_dot() {
    let m: Representation = serde_json::from_str(&fixture("kronecker.json")).unwrap();
    let f = embed_l2(&m).unwrap();
    assert_eq!(f.total_dim(), 2 * m.total_dim());
    assert!(is_indecomposable(&f));
    assert_eq!(gamma_of(&f).to_dot(), fixture("kronecker_embed.dot"));
}
