use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use cuberig::compiler::{compile, CostModel};
use cuberig::cube::{random_state, CubieState, FaceletState, MoveSequence, SOLVED_FACELETS};
use cuberig::sim::{RigState, Simulator};
use cuberig_service::http::{router, App};
use cuberig_service::Engine;

fn app() -> Router {
    router(Arc::new(App::new(Engine::shared(), 8)))
}

async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(b) => req.header("content-type", "application/json").body(Body::from(b.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    (status, value)
}

async fn post(app: &Router, uri: &str, body: Value) -> (StatusCode, Value) {
    call(app, Method::POST, uri, Some(body)).await
}

fn with_swapped_edges() -> String {
    let mut ep = CubieState::SOLVED.edge_perm();
    ep.swap(0, 1);
    let c = CubieState::new(CubieState::SOLVED.corner_perm(), [0; 8], ep, [0; 12]).unwrap();
    FaceletState::from(&c).to_string()
}

#[tokio::test]
async fn solving_solved_is_free() {
    let (status, body) = post(&app(), "/solve", json!({ "state": SOLVED_FACELETS })).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["solution"], "");
    assert_eq!(body["program"], json!([]));
    assert_eq!(body["serial_hex"], "0a");
    assert_eq!(body["total_ms"].to_string(), "0.0");
}

#[tokio::test]
async fn solve_returns_a_consistent_program() {
    let state = FaceletState::from(&random_state(21)).to_string();
    let (status, body) = post(&app(), "/solve", json!({ "state": state })).await;
    assert_eq!(status, StatusCode::OK);
    let solution: MoveSequence = body["solution"].as_str().unwrap().parse().unwrap();
    assert!(solution.len() <= 24);
    assert!(random_state(21).apply_sequence(solution.iter()).is_solved());
    let prog = compile(&solution, &CostModel::default(), false);
    assert_eq!(body["total_ms"].as_f64().unwrap(), prog.total_ms());
    assert_eq!(body["program"].as_array().unwrap().len(), prog.len());
    assert_eq!(body["program"][0], json!(prog.names()[0]));
}

#[tokio::test]
async fn invalid_states_report_their_verdict() {
    let app = app();
    let mut twisted = SOLVED_FACELETS.as_bytes().to_vec();
    // Rotate the stickers of the URF corner (U9, R1, F3).
    let (u, r, f) = (twisted[8], twisted[9], twisted[20]);
    (twisted[8], twisted[9], twisted[20]) = (f, u, r);
    let twisted = String::from_utf8(twisted).unwrap();
    let cases = [
        (SOLVED_FACELETS[..53].to_string(), "BadLength"),
        (with_swapped_edges(), "PermParity"),
        (twisted, "TwistSum"),
        (SOLVED_FACELETS.replacen('U', "X", 1), "BadCharacter"),
    ];
    for (state, verdict) in cases {
        let (status, body) = post(&app, "/solve", json!({ "state": state })).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{verdict}");
        assert_eq!(body["error"], verdict);
    }
}

#[tokio::test]
async fn scrambles_are_deterministic_and_realizable() {
    let app = app();
    let (_, a) = post(&app, "/scramble", json!({ "mode": "real", "seed": 11 })).await;
    let (_, b) = post(&app, "/scramble", json!({ "mode": "real", "seed": 11 })).await;
    assert_eq!(a, b);
    let state = FaceletState::parse(a["state"].as_str().unwrap()).unwrap().to_cubies().unwrap();
    assert_eq!(state, random_state(11));
    let moves: MoveSequence = a["moves"].as_str().unwrap().parse().unwrap();
    assert_eq!(CubieState::SOLVED.apply_sequence(moves.iter()), state);
    let prog = compile(&moves, &CostModel::default(), false);
    let (end, _) = Simulator::default().run_program(&RigState::new(CubieState::SOLVED), &prog).unwrap();
    assert_eq!(end.cube, state);
    assert_eq!(a["total_ms"].as_f64().unwrap(), end.elapsed_ms);

    let (status, v) = post(&app, "/scramble", json!({ "seed": 2, "length": 12 })).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["mode"], "virtual");
    assert!(v.get("program").is_none());
    assert_eq!(v["moves"].as_str().unwrap().split(' ').count(), 12);
}

#[tokio::test]
async fn faces_assemble_in_canonical_order() {
    let app = app();
    let (status, _) = call(&app, Method::GET, "/faces/assembled", None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    let faces: Vec<&str> = (0..6).rev().map(|i| &SOLVED_FACELETS[i * 9..i * 9 + 9]).collect();
    for f in &faces[..5] {
        let (status, _) = post(&app, "/faces", json!({ "face": f })).await;
        assert_eq!(status, StatusCode::OK);
    }
    let (status, body) = call(&app, Method::GET, "/faces/assembled", None).await;
    assert_eq!((status, body["error"].as_str()), (StatusCode::CONFLICT, Some("IncompleteCapture")));
    let (_, view) = post(&app, "/faces", json!({ "face": faces[5] })).await;
    assert_eq!(view["complete"], true);
    let (status, body) = call(&app, Method::GET, "/faces/assembled", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["state"], SOLVED_FACELETS);
    assert_eq!(body["verdict"], "Valid");

    let (status, body) = post(&app, "/faces", json!({ "faces": ["FFFFFFFFF", "FFFFFFFFU"] })).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(body["error"], "DuplicateCenterConflict");
    let (status, body) = post(&app, "/faces", json!({ "face": "FFFF" })).await;
    assert_eq!((status, body["error"].as_str()), (StatusCode::BAD_REQUEST, Some("BadFaceString")));
}

#[tokio::test]
async fn session_counter_tracks_user_and_solver_moves() {
    let app = app();
    let base = random_state(8);
    let (status, view) = post(&app, "/sessions", json!({ "state": FaceletState::from(&base).to_string() })).await;
    assert_eq!(status, StatusCode::OK);
    let id = view["id"].as_str().unwrap().to_string();
    assert_eq!(view["total_moves"].as_u64().unwrap() as usize, view["solution"].as_str().unwrap().split(' ').count());

    let (status, view) = post(&app, &format!("/sessions/{id}/moves"), json!({ "moves": "LUD'" })).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["user_display"], "LUD'");
    assert_eq!(view["cursor"], 3);
    let user: MoveSequence = view["user_moves"].as_str().unwrap().parse().unwrap();
    let solution: MoveSequence = view["solution"].as_str().unwrap().parse().unwrap();
    assert_eq!(view["total_moves"].as_u64().unwrap() as usize, user.len() + solution.len());
    assert!(base.apply_sequence(user.iter()).apply_sequence(solution.iter()).is_solved());

    let (_, stepped) = post(&app, &format!("/sessions/{id}/step"), json!({ "direction": "next" })).await;
    assert_eq!(stepped["cursor"], 4);
    let (status, body) = post(&app, &format!("/sessions/{id}/moves"), json!({ "moves": "R" })).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(body["error"], "MoveNotAllowedMidPlayback");
    let (_, back) = post(&app, &format!("/sessions/{id}/step"), json!({ "direction": "prev" })).await;
    assert_eq!(back["state"], view["state"]);

    let (status, fetched) = call(&app, Method::GET, &format!("/sessions/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(fetched["cursor"], 3);
}

#[tokio::test]
async fn solved_session_and_unknown_ids() {
    let app = app();
    let (_, view) = post(&app, "/sessions", json!({})).await;
    assert_eq!(view["total_moves"], 0);
    assert_eq!(view["state"], SOLVED_FACELETS);
    let id = view["id"].as_str().unwrap();
    let (_, same) = post(&app, &format!("/sessions/{id}/step"), json!({ "direction": "next" })).await;
    assert_eq!(same["cursor"], 0);

    let (status, body) = call(&app, Method::GET, "/sessions/nope", None).await;
    assert_eq!((status, body["error"].as_str()), (StatusCode::NOT_FOUND, Some("UnknownSession")));
    let (status, _) = post(&app, "/sessions/nope/step", json!({ "direction": "next" })).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, body) = post(&app, &format!("/sessions/{id}/moves"), json!({ "moves": "R3" })).await;
    assert_eq!((status, body["error"].as_str()), (StatusCode::BAD_REQUEST, Some("BadToken")));
}
