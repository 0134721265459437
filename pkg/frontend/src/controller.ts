// Orchestrates one game session: new-game form submission, click handling with
// at most one in-flight request, and the optional analysis overlay.

import { ApiClient, ApiError } from "./api.js";
import type { AnalysisEntry, GameStateDto, NewSessionRequest, Side } from "./api.js";
import { buildBoardViewModel } from "./model.js";
import type { BoardViewModel } from "./model.js";

export interface ControllerListener {
  onUpdate(vm: BoardViewModel): void;
  onError(message: string): void;
}

export class GameController {
  private sessionId: string | null = null;
  private state: GameStateDto | null = null;
  private humanSide: Side = "alice";
  private analysisOn = false;
  private analysisEntries: AnalysisEntry[] | null = null;
  private inFlight = false;

  constructor(
    private readonly api: ApiClient,
    private readonly listener: ControllerListener,
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  get currentState(): GameStateDto | null {
    return this.state;
  }

  get analysisShown(): boolean {
    return this.analysisOn;
  }

  viewModel(): BoardViewModel | null {
    if (!this.state) return null;
    return buildBoardViewModel(
      this.state,
      this.humanSide,
      this.analysisOn ? this.analysisEntries : null,
    );
  }

  private emit(): void {
    const vm = this.viewModel();
    if (vm) this.listener.onUpdate(vm);
  }

  private async guarded<T>(work: () => Promise<T>): Promise<T | undefined> {
    if (this.inFlight) return undefined;
    this.inFlight = true;
    try {
      return await work();
    } catch (err) {
      this.listener.onError(err instanceof ApiError ? err.detail : String(err));
      return undefined;
    } finally {
      this.inFlight = false;
    }
  }

  async newGame(req: NewSessionRequest): Promise<void> {
    await this.guarded(async () => {
      const { sessionId, state } = await this.api.createSession(req);
      this.sessionId = sessionId;
      this.state = state;
      this.humanSide = req.human_side;
      this.analysisEntries = null;
      if (this.analysisOn && !state.game_over) {
        this.analysisEntries = await this.api.analysis(sessionId);
      }
      this.emit();
    });
  }

  async clickVertex(vertex: number): Promise<void> {
    if (!this.sessionId || !this.state || this.state.game_over) return;
    if (this.state.to_move !== this.humanSide) return;
    const sid = this.sessionId;
    await this.guarded(async () => {
      this.state = await this.api.move(sid, vertex);
      this.analysisEntries = null;
      if (this.analysisOn && !this.state.game_over) {
        this.analysisEntries = await this.api.analysis(sid);
      }
      this.emit();
    });
  }

  async toggleAnalysis(): Promise<void> {
    this.analysisOn = !this.analysisOn;
    const sid = this.sessionId;
    if (this.analysisOn && sid && this.state && !this.state.game_over) {
      await this.guarded(async () => {
        this.analysisEntries = await this.api.analysis(sid);
      });
    }
    this.emit();
  }
}
