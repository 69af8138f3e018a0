use std::sync::{Arc, Mutex};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;

use cuberig::cube::{CubieState, MoveSequence};

use crate::capture::{CaptureView, FaceCapture};
use crate::engine::{parse_state, Engine, ScrambleMode, ScrambleOutcome, SolveOutcome};
use crate::error::Rejection;
use crate::session::{Direction, SessionStore, SessionView};

pub struct App {
    pub engine: Engine,
    pub sessions: SessionStore,
    pub capture: Mutex<FaceCapture>,
}

impl App {
    pub fn new(engine: Engine, session_capacity: usize) -> Self {
        App {
            engine,
            sessions: SessionStore::new(session_capacity),
            capture: Mutex::new(FaceCapture::new()),
        }
    }
}

pub struct ApiError(pub Rejection);

impl From<Rejection> for ApiError {
    fn from(r: Rejection) -> Self {
        ApiError(r)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.0 {
            Rejection::UnknownSession(_) => StatusCode::NOT_FOUND,
            Rejection::MoveNotAllowedMidPlayback
            | Rejection::DuplicateCenterConflict(_)
            | Rejection::IncompleteCapture(_) => StatusCode::CONFLICT,
            Rejection::NoSolution(_) => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        let body = json!({ "error": self.0.name(), "message": self.0.to_string() });
        (status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

/// Runs solver work off the async executor.
async fn blocking<T, F>(f: F) -> Result<T, ApiError>
where
    F: FnOnce() -> Result<T, Rejection> + Send + 'static,
    T: Send + 'static,
{
    tokio::task::spawn_blocking(f).await.expect("solver task panicked").map_err(ApiError)
}

#[derive(Deserialize)]
pub struct SolveRequest {
    pub state: String,
}

#[derive(Deserialize, Default)]
#[serde(default)]
pub struct ScrambleRequest {
    pub mode: ScrambleMode,
    pub seed: u64,
    pub length: Option<usize>,
}

#[derive(Deserialize, Default)]
#[serde(default)]
pub struct FacesRequest {
    pub face: Option<String>,
    pub faces: Vec<String>,
    /// Drop everything captured so far before ingesting.
    pub reset: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct Assembled {
    pub state: String,
    pub verdict: String,
}

#[derive(Deserialize, Default)]
#[serde(default)]
pub struct CreateSession {
    pub state: Option<String>,
}

#[derive(Deserialize)]
pub struct MovesRequest {
    pub moves: String,
}

#[derive(Deserialize)]
pub struct StepRequest {
    pub direction: Direction,
}

async fn solve(State(app): State<Arc<App>>, Json(req): Json<SolveRequest>) -> ApiResult<SolveOutcome> {
    blocking(move || app.engine.solve_text(&req.state)).await.map(Json)
}

async fn scramble(State(app): State<Arc<App>>, Json(req): Json<ScrambleRequest>) -> ApiResult<ScrambleOutcome> {
    blocking(move || app.engine.scramble(req.mode, req.seed, req.length)).await.map(Json)
}

async fn faces(State(app): State<Arc<App>>, Json(req): Json<FacesRequest>) -> ApiResult<CaptureView> {
    let mut capture = app.capture.lock().unwrap();
    if req.reset {
        capture.clear();
    }
    let mut batch = req.faces;
    batch.extend(req.face);
    capture.ingest_batch(&batch)?;
    Ok(Json(capture.view()))
}

async fn assembled(State(app): State<Arc<App>>) -> ApiResult<Assembled> {
    let state = app.capture.lock().unwrap().assemble()?;
    let verdict = match parse_state(&state) {
        Ok(_) => "Valid".to_string(),
        Err(e) => e.name().to_string(),
    };
    Ok(Json(Assembled { state, verdict }))
}

async fn create_session(State(app): State<Arc<App>>, Json(req): Json<CreateSession>) -> ApiResult<SessionView> {
    blocking(move || {
        let base = match &req.state {
            Some(s) => parse_state(s)?,
            None => CubieState::SOLVED,
        };
        app.sessions.create(base, &app.engine)
    })
    .await
    .map(Json)
}

async fn session_moves(
    State(app): State<Arc<App>>,
    Path(id): Path<String>,
    Json(req): Json<MovesRequest>,
) -> ApiResult<SessionView> {
    blocking(move || {
        let moves: MoveSequence = req.moves.parse()?;
        let session = app.sessions.get(&id)?;
        let mut session = session.lock().unwrap();
        session.user_moves(&moves, &app.engine)?;
        Ok(session.view())
    })
    .await
    .map(Json)
}

async fn session_step(
    State(app): State<Arc<App>>,
    Path(id): Path<String>,
    Json(req): Json<StepRequest>,
) -> ApiResult<SessionView> {
    let session = app.sessions.get(&id)?;
    let mut session = session.lock().unwrap();
    session.step(req.direction);
    Ok(Json(session.view()))
}

async fn session_view(State(app): State<Arc<App>>, Path(id): Path<String>) -> ApiResult<SessionView> {
    let session = app.sessions.get(&id)?;
    let view = session.lock().unwrap().view();
    Ok(Json(view))
}

pub fn router(app: Arc<App>) -> Router {
    Router::new()
        .route("/solve", post(solve))
        .route("/scramble", post(scramble))
        .route("/faces", post(faces))
        .route("/faces/assembled", get(assembled))
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(session_view))
        .route("/sessions/{id}/moves", post(session_moves))
        .route("/sessions/{id}/step", post(session_step))
        .with_state(app)
}
