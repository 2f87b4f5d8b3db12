#![allow(clippy::needless_range_loop)]

mod common;

use common::{OCT_NAMES, OCT_TEXT, QUAT_NAMES, QUAT_TEXT};
use hyperalg::table::{OCT_PARAM_NAMES, OCT_TABLE, QUAT_PARAM_NAMES, QUAT_TABLE};

#[test]
fn stored_tables_render_like_the_transcription() {
    assert_eq!(QUAT_PARAM_NAMES, QUAT_NAMES);
    assert_eq!(OCT_PARAM_NAMES, OCT_NAMES);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(QUAT_TABLE[i][j].symbolic(&QUAT_PARAM_NAMES), QUAT_TEXT[i][j], "e{i}·e{j}");
        }
    }
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(OCT_TABLE[i][j].symbolic(&OCT_PARAM_NAMES), OCT_TEXT[i][j], "e{i}·e{j}");
        }
    }
}

#[test]
fn basis_products_match_for_every_parameter_set() {
    assert_eq!(common::table_mismatches(), Vec::<String>::new());
}

#[test]
fn quaternion_subalgebra_of_octonions_reuses_the_quaternion_table() {
    for i in 0..4 {
        for j in 0..4 {
            let q = QUAT_TEXT[i][j].replace("β1", "α").replace("β2", "β");
            assert_eq!(OCT_TEXT[i][j], q);
        }
    }
}
