// Client-side session state machine.
//
// The server is the only authority: this controller always submits a decision
// for exactly the word it last saw from /next, keeps at most one request in
// flight, and treats a 409 as "resync and re-ask", never as applied. Those
// three rules make it impossible to skip a word or apply a decision twice, no
// matter how many conflicts the service injects.

import {
	ApiSession,
	DecisionOutcome,
	NextResponse,
	PendingWord,
	Progress,
	SeriesPoint,
	isComplete,
} from "./api.js";

/** The slice of the service the controller needs; ApiClient satisfies it. */
export interface ServiceApi {
	currentSession(): Promise<ApiSession | null>;
	createSession(m: number, seed: number): Promise<ApiSession>;
	next(sessionId: string): Promise<NextResponse>;
	decide(sessionId: string, word: string, accept: boolean): Promise<DecisionOutcome>;
	series(): Promise<{ points: SeriesPoint[]; complete: boolean }>;
}

export type Phase = "idle" | "awaiting" | "complete";

export type DecideResult = "applied" | "resynced" | "completed" | "ignored";

export interface Snapshot {
	phase: Phase;
	sessionId: string | null;
	current: PendingWord | null;
	progress: Progress | null;
	decayPoints: SeriesPoint[];
	decisionsApplied: number;
	resyncs: number;
}

export class SessionController {
	private phase: Phase = "idle";
	private sessionId: string | null = null;
	private current: PendingWord | null = null;
	private progress: Progress | null = null;
	private decayPoints: SeriesPoint[] = [];
	private decisionsApplied = 0;
	private resyncs = 0;
	private busy = false;

	constructor(
		private api: ServiceApi,
		private onChange: (snapshot: Snapshot) => void = () => {},
	) {}

	snapshot(): Snapshot {
		return {
			phase: this.phase,
			sessionId: this.sessionId,
			current: this.current,
			progress: this.progress,
			decayPoints: [...this.decayPoints],
			decisionsApplied: this.decisionsApplied,
			resyncs: this.resyncs,
		};
	}

	private notify() {
		this.onChange(this.snapshot());
	}

	/** Rediscover an active session after a page load. Returns false if the
	 * service has none, in which case the caller shows the start form. */
	async attach(): Promise<boolean> {
		const session = await this.api.currentSession();
		if (session === null) {
			this.phase = "idle";
			this.notify();
			return false;
		}
		this.adoptSession(session);
		await this.refreshSeries();
		await this.refreshNext();
		return true;
	}

	async begin(m: number, seed: number): Promise<void> {
		const session = await this.api.createSession(m, seed);
		this.adoptSession(session);
		await this.refreshNext();
	}

	private adoptSession(session: ApiSession) {
		this.sessionId = session.session_id;
		this.progress = session.progress;
		this.decisionsApplied = 0;
		this.resyncs = 0;
		this.decayPoints = [];
	}

	/** Fetch the authoritative pending word (idempotent on the server side). */
	async refreshNext(): Promise<void> {
		if (this.sessionId === null) return;
		const next = await this.api.next(this.sessionId);
		if (isComplete(next)) {
			this.phase = "complete";
			this.current = null;
			this.progress = next.progress;
			await this.refreshSeries();
		} else {
			this.phase = "awaiting";
			this.current = next;
			this.progress = next.progress;
		}
		this.notify();
	}

	async refreshSeries(): Promise<void> {
		const series = await this.api.series();
		this.decayPoints = series.points;
	}

	private acceptingDecisions(): boolean {
		return this.phase === "awaiting";
	}

	/** Apply the user's decision to the currently displayed word. */
	async decide(accept: boolean): Promise<DecideResult> {
		if (this.busy || !this.acceptingDecisions() || !this.current || !this.sessionId) {
			return "ignored";
		}
		this.busy = true;
		try {
			const abstractsDoneBefore = this.progress?.abstracts_done ?? 0;
			const outcome = await this.api.decide(this.sessionId, this.current.word, accept);
			if (outcome.applied) {
				this.decisionsApplied += 1;
				if (outcome.progress) this.progress = outcome.progress;
			} else {
				// 409: nothing was applied; the refetch below shows the
				// authoritative pending word (or completion)
				this.resyncs += 1;
			}
			await this.refreshNext();
			if ((this.progress?.abstracts_done ?? 0) !== abstractsDoneBefore) {
				await this.refreshSeries();
				this.notify();
			}
			if (this.phase === "complete") return "completed";
			return outcome.applied ? "applied" : "resynced";
		} finally {
			this.busy = false;
		}
	}
}
