// DOM wiring: start form, classification screen, progress panel, results.
// All state lives in the SessionController; this file only renders snapshots
// and forwards clicks and keystrokes.

import { ApiClient, buildExportUrl, ResultsTable } from "./api.js";
import { chartSvg } from "./chart.js";
import { SessionController, Snapshot } from "./controller.js";

const api = new ApiClient();
const controller = new SessionController(api, render);

function el<T extends HTMLElement>(id: string): T {
	const found = document.getElementById(id);
	if (!found) throw new Error(`missing element #${id}`);
	return found as T;
}

const screens = {
	start: () => el<HTMLElement>("start-screen"),
	classify: () => el<HTMLElement>("classify-screen"),
	results: () => el<HTMLElement>("results-screen"),
};

function show(name: keyof typeof screens) {
	for (const [key, get] of Object.entries(screens)) {
		get().hidden = key !== name;
	}
}

function render(snapshot: Snapshot) {
	if (snapshot.phase === "complete") {
		void renderResults();
		return;
	}
	if (snapshot.phase === "awaiting" && snapshot.current) {
		show("classify");
		el("context-before").textContent = snapshot.current.context_before;
		el("pending-word").textContent = snapshot.current.surface;
		el("context-after").textContent = snapshot.current.context_after;
		el("abstract-id").textContent = snapshot.current.abstract_id;
	}
	const progress = snapshot.progress;
	if (progress) {
		el("counter-abstracts").textContent =
			`${progress.abstracts_done}/${progress.abstracts_total}`;
		el("counter-classified").textContent = String(progress.words_classified);
		el("counter-accepted").textContent = String(progress.accept_count);
		el("counter-rejected").textContent = String(progress.reject_count);
	}
	el("decay-chart").innerHTML = chartSvg(snapshot.decayPoints);
	el("resync-note").textContent =
		snapshot.resyncs > 0 ? `resynced ${snapshot.resyncs} times` : "";
}

async function renderResults() {
	show("results");
	const top = Number((el<HTMLSelectElement>("top-k")).value) || 15;
	const [keywords, combos] = await Promise.all([
		api.results("keywords", top),
		api.results("combos", top).catch(() => null),
	]);
	renderTable("keywords-table", keywords);
	const comboNote = el("combos-note");
	if (combos === null || combos.entries.length === 0) {
		renderTable("combos-table", { target: "combos", n_abstracts: 0, entries: [] });
		comboNote.textContent = "No combo appeared in any abstract.";
	} else {
		renderTable("combos-table", combos);
		comboNote.textContent = "";
	}
	el<HTMLAnchorElement>("export-keywords").href = buildExportUrl("keywords", top);
	el<HTMLAnchorElement>("export-combos").href = buildExportUrl("combos", top);
}

function renderTable(id: string, table: ResultsTable) {
	const rows = table.entries
		.map(
			([, display, count], index) =>
				`<tr><td>${index + 1}</td><td>${escapeHtml(display)}</td><td>${count}</td></tr>`,
		)
		.join("");
	el(id).innerHTML =
		"<tr><th>rank</th><th>keyword</th><th>frequency</th></tr>" + rows;
}

function escapeHtml(text: string): string {
	return text.replace(/[&<>"]/g, (c) =>
		({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c] as string,
	);
}

function setBanner(message: string) {
	const banner = el("error-banner");
	banner.textContent = message;
	banner.hidden = message === "";
}

async function guard(action: () => Promise<unknown>) {
	try {
		await action();
		setBanner("");
	} catch (error) {
		setBanner(`service unreachable or refused: ${String(error)} (retry with R)`);
	}
}

function wire() {
	el("start-form").addEventListener("submit", (event) => {
		event.preventDefault();
		const m = Number(el<HTMLInputElement>("start-m").value);
		const seed = Number(el<HTMLInputElement>("start-seed").value);
		void guard(() => controller.begin(m, seed));
	});
	el("btn-accept").addEventListener("click", () => void guard(() => controller.decide(true)));
	el("btn-reject").addEventListener("click", () => void guard(() => controller.decide(false)));
	el<HTMLSelectElement>("top-k").addEventListener("change", () => void guard(renderResults));

	document.addEventListener("keydown", (event) => {
		if (event.target instanceof HTMLInputElement) return;
		if (event.key === "1") void guard(() => controller.decide(true));
		else if (event.key === "0") void guard(() => controller.decide(false));
		else if (event.key.toLowerCase() === "r") void guard(() => controller.refreshNext());
	});

	void guard(async () => {
		const active = await controller.attach();
		if (!active) show("start");
	});
}

document.addEventListener("DOMContentLoaded", wire);
