use invint_wasm::*;
use serde_json::json;

#[test]
fn weingarten_table_for_orthogonal_degree_two() {
    let v: serde_json::Value = serde_json::from_str(&weingarten_json("O", 3, 2).unwrap()).unwrap();
    assert_eq!(v["coeffs"][0]["coeff"], "2/5");
    assert_eq!(v["coeffs"][1]["coeff"], "-1/5");
}

#[test]
fn weingarten_rejects_bad_input() {
    assert!(weingarten_json("Q", 3, 1).is_err());
    assert!(weingarten_json("Sp", 3, 1).is_err());
    assert!(weingarten_json("O", 3, MAX_DEMO_DEGREE + 1).is_err());
}

#[test]
fn sl_dim_catalan() {
    let got: Vec<String> = (0..6).map(|m| sl_dim_text(2, m).unwrap()).collect();
    assert_eq!(got, ["1", "1", "2", "5", "14", "42"]);
    assert!(sl_dim_text(0, 1).is_err());
}

#[test]
fn fourier_of_identity_indicator() {
    let out = fourier_json("s3", r#"{"values":["1","0","0","0","0","0"]}"#).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degrees"], json!([1, 1, 2]));
    assert_eq!(
        v["fourier"]["blocks"][2],
        json!([["1/6", "0"], ["0", "1/6"]])
    );
    assert!(fourier_json("s3", r#"{"values":["1"]}"#).is_err());
    assert!(fourier_json("nope", r#"{"values":[]}"#).is_err());
}

#[test]
fn complex_group_elements() {
    let names: Vec<String> = serde_json::from_str(&group_elements_json("c4").unwrap()).unwrap();
    assert_eq!(names.len(), 4);
    let out = fourier_json("c4", r#"{"values":["1","1","1","1"]}"#).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["fourier"]["blocks"][0][0][0]["re"], 1.0);
}
