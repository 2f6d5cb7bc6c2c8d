import init, { classify_violation, explore_noisy_ghz, scan_state } from "./pkg/belldist_wasm.js";

const $ = (id) => document.getElementById(id);
const int = (id) => parseInt($(id).value, 10);
const num = (id) => parseFloat($(id).value);

function call(f, ...args) {
  try {
    return { ok: JSON.parse(f(...args)) };
  } catch (e) {
    return { err: String(e) };
  }
}

function show(el, text, isError) {
  el.textContent = text;
  el.classList.toggle("err", !!isError);
}

function describe(c) {
  const lines = [
    `p_min                 ${c.p_min ?? "none"}`,
    `entanglement depth >= ${c.depth_bound}`,
    `bipartite distillable ${c.bipartite_distillable}`,
    `fully distillable     ${c.fully_distillable}`,
  ];
  return lines.join("\n");
}

function explore() {
  const n = int("ex-n"), p = num("ex-p"), restarts = int("ex-r"), seed = int("ex-seed");
  $("ex-p-val").textContent = p.toFixed(2);
  const r = call(explore_noisy_ghz, n, p, restarts, seed);
  if (r.err) return show($("ex-out"), r.err, true);
  const e = r.ok;
  show($("ex-out"),
    `v = ${e.violation.toFixed(6)}   (p·2^((N-1)/2) = ${e.expected.toFixed(6)})\n` +
    `GHZ overlap ${e.overlap.toFixed(4)}\n` + describe(e.classification));
  plot(n, restarts, seed, e);
}

function plot(n, restarts, seed, current) {
  const canvas = $("ex-plot");
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 40;
  const vmax = 2 ** ((n - 1) / 2) * 1.05;
  const x = (p) => pad + p * (W - 2 * pad);
  const y = (v) => H - pad - (v / vmax) * (H - 2 * pad);
  ctx.clearRect(0, 0, W, H);
  ctx.font = "12px system-ui";

  // Thresholds 2^((N-p)/2): above the line for group size p, any p qubits can share distillable entanglement.
  for (const [p, t] of current.classification.thresholds) {
    ctx.strokeStyle = p === 2 ? "#c44" : "#bbb";
    ctx.beginPath(); ctx.moveTo(x(0), y(t)); ctx.lineTo(x(1), y(t)); ctx.stroke();
    ctx.fillStyle = "#666";
    ctx.fillText(p === n ? "LV bound" : `p = ${p}`, x(1) + 4, y(t) + 4);
  }

  ctx.strokeStyle = "#246";
  ctx.lineWidth = 2;
  ctx.beginPath();
  for (let i = 0; i <= 20; i++) {
    const p = i / 20;
    const r = call(explore_noisy_ghz, n, p, Math.min(restarts, 4), seed);
    if (r.err) continue;
    i === 0 ? ctx.moveTo(x(p), y(r.ok.violation)) : ctx.lineTo(x(p), y(r.ok.violation));
  }
  ctx.stroke();
  ctx.lineWidth = 1;

  ctx.fillStyle = "#246";
  ctx.beginPath(); ctx.arc(x(current.p), y(current.violation), 5, 0, 2 * Math.PI); ctx.fill();

  ctx.strokeStyle = "#000";
  ctx.beginPath(); ctx.moveTo(x(0), y(0)); ctx.lineTo(x(1), y(0)); ctx.moveTo(x(0), y(0)); ctx.lineTo(x(0), y(vmax)); ctx.stroke();
  ctx.fillStyle = "#000";
  ctx.fillText("p", x(1) - 4, y(0) + 20);
  ctx.fillText("0", x(0) - 4, y(0) + 16);
  ctx.fillText("1", x(1) - 4, y(0) + 16);
  ctx.fillText("v", x(0) - 20, y(vmax) + 10);
}

function scan() {
  const r = call(scan_state, $("sc-kind").value, int("sc-n"), num("sc-p"));
  const table = $("sc-table");
  table.innerHTML = "";
  if (r.err) return show($("sc-summary"), r.err, true);
  const s = r.ok;
  const worst = Math.min(...s.cuts.map((c) => c.min_eigenvalue));
  show($("sc-summary"), `${s.nppt_count} of ${s.cuts.length} bipartitions NPPT, most negative eigenvalue ${worst.toExponential(3)}`);
  const scale = Math.max(1e-12, ...s.cuts.map((c) => Math.abs(c.min_eigenvalue)));
  table.insertAdjacentHTML("beforeend", "<tr><th>cut</th><th>min eigenvalue</th><th></th></tr>");
  for (const c of s.cuts) {
    const width = Math.round((Math.abs(c.min_eigenvalue) / scale) * 200);
    const row = document.createElement("tr");
    row.innerHTML =
      `<td>{${c.side_a.join(",")}} | {${c.side_b.join(",")}}</td>` +
      `<td>${c.min_eigenvalue.toExponential(3)}</td>` +
      `<td><span class="bar ${c.nppt ? "" : "ppt"}" style="width:${width}px"></span></td>`;
    table.appendChild(row);
  }
}

function classify() {
  const r = call(classify_violation, num("cl-v"), int("cl-n"));
  if (r.err) return show($("cl-out"), r.err, true);
  const thresholds = r.ok.thresholds.map(([p, t]) => `  p = ${p}: v > ${t.toFixed(6)}`).join("\n");
  show($("cl-out"), describe(r.ok) + "\nthresholds\n" + thresholds);
}

await init();
for (const id of ["ex-n", "ex-p", "ex-r", "ex-seed"]) $(id).addEventListener("input", explore);
for (const id of ["cl-v", "cl-n"]) $(id).addEventListener("input", classify);
$("sc-run").addEventListener("click", scan);
explore();
scan();
classify();
