// Typed client for the kwextract service API. All bodies are JSON except the
// TSV export, which is passed through untouched.

export interface Progress {
	abstracts_done: number;
	abstracts_total: number;
	words_classified: number;
	accept_count: number;
	reject_count: number;
}

export interface ApiSession {
	session_id: string;
	state: "advancing" | "awaiting_decision" | "complete";
	progress: Progress;
}

export interface PendingWord {
	word: string;
	surface: string;
	context_before: string;
	context_after: string;
	abstract_id: string;
	progress: Progress;
}

export interface SessionComplete {
	complete: true;
	progress: Progress;
}

export type NextResponse = PendingWord | SessionComplete;

export function isComplete(next: NextResponse): next is SessionComplete {
	return (next as SessionComplete).complete === true;
}

export interface DecisionOutcome {
	applied: boolean;
	// authoritative pending word when the service answered 409 (stale client)
	pending: string | null;
	progress: Progress | null;
}

export type SeriesPoint = [position: number, tokens: number, queries: number, percentage: number];

export type TableRow = [key: string, display: string, count: number];

export interface ResultsTable {
	target: string;
	n_abstracts: number;
	entries: TableRow[];
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
	constructor(public status: number, message: string) {
		super(message);
	}
}

export function buildExportUrl(target: "keywords" | "combos", top: number): string {
	return `/api/export?target=${target}&top=${top}`;
}

export class ApiClient {
	private fetchImpl: FetchLike;

	constructor(fetchImpl?: FetchLike, private base: string = "") {
		this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
	}

	private async json<T>(path: string, init?: RequestInit): Promise<T> {
		const response = await this.fetchImpl(this.base + path, init);
		const body = await response.json();
		if (!response.ok) {
			throw new ApiError(response.status, body?.error ?? `HTTP ${response.status}`);
		}
		return body as T;
	}

	async currentSession(): Promise<ApiSession | null> {
		const body = await this.json<{ active: boolean; session?: ApiSession }>("/api/session");
		return body.active && body.session ? body.session : null;
	}

	async createSession(m: number, seed: number): Promise<ApiSession> {
		return this.json<ApiSession>("/api/sessions", {
			method: "POST",
			headers: { "Content-Type": "application/json" },
			body: JSON.stringify({ m, seed }),
		});
	}

	async next(sessionId: string): Promise<NextResponse> {
		return this.json<NextResponse>(`/api/sessions/${sessionId}/next`);
	}

	/** Post a decision. A 409 is not an error: it reports the authoritative
	 * pending word so the client can resync without losing anything. */
	async decide(sessionId: string, word: string, accept: boolean): Promise<DecisionOutcome> {
		const response = await this.fetchImpl(`${this.base}/api/sessions/${sessionId}/decision`, {
			method: "POST",
			headers: { "Content-Type": "application/json" },
			body: JSON.stringify({ word, accept }),
		});
		const body = await response.json();
		if (response.ok) {
			return { applied: true, pending: null, progress: body.progress ?? null };
		}
		if (response.status === 409) {
			return { applied: false, pending: body.pending ?? null, progress: null };
		}
		throw new ApiError(response.status, body?.error ?? `HTTP ${response.status}`);
	}

	async series(): Promise<{ points: SeriesPoint[]; complete: boolean }> {
		return this.json("/api/results?target=series");
	}

	async results(target: "keywords" | "combos", top: number): Promise<ResultsTable> {
		return this.json(`/api/results?target=${target}&top=${top}`);
	}

	/** The raw TSV bytes as served; callers must not transform them. */
	async exportTsv(target: "keywords" | "combos", top: number): Promise<string> {
		const response = await this.fetchImpl(this.base + buildExportUrl(target, top));
		if (!response.ok) {
			throw new ApiError(response.status, `HTTP ${response.status}`);
		}
		return response.text();
	}
}
