mod common;

#[test]
fn word_crystal_structure_lemmas() {
    common::svword_lemmas_suite();
}
