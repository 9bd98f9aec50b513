import init, { analyze_algebra, random_gea, effect_witness, demo_excd } from "./pkg/gea_web.js";

const $ = (id) => document.getElementById(id);

const DIAMOND = {
  elements: ["0", "a", "b", "1"],
  zero: "0",
  unit: "1",
  sums: [
    ["0", "0", "0"], ["0", "a", "a"], ["a", "0", "a"], ["0", "b", "b"], ["b", "0", "b"],
    ["0", "1", "1"], ["1", "0", "1"], ["a", "b", "1"], ["b", "a", "1"],
  ],
};

function esc(s) {
  return String(s).replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" })[c]);
}

function flag(ok, yes, no) {
  return `<span class="${ok ? "ok" : "bad"}">${ok ? yes : no}</span>`;
}

// Elements placed by rank (longest chain of covers from zero).
function drawHasse(elements, covers) {
  const svg = $("hasse");
  const rank = Object.fromEntries(elements.map((e) => [e, 0]));
  for (let pass = 0; pass < elements.length; pass++) {
    for (const [x, y] of covers) rank[y] = Math.max(rank[y], rank[x] + 1);
  }
  const levels = {};
  for (const e of elements) (levels[rank[e]] ??= []).push(e);
  const top = Math.max(0, ...Object.keys(levels).map(Number));
  const w = svg.width.baseVal.value, h = svg.height.baseVal.value;
  const pos = {};
  for (const [r, row] of Object.entries(levels)) {
    row.forEach((e, i) => {
      pos[e] = [((i + 1) * w) / (row.length + 1), h - 20 - (top ? (Number(r) * (h - 40)) / top : 0)];
    });
  }
  let out = "";
  for (const [x, y] of covers) {
    out += `<line x1="${pos[x][0]}" y1="${pos[x][1]}" x2="${pos[y][0]}" y2="${pos[y][1]}" stroke="#888"/>`;
  }
  for (const e of elements) {
    const [cx, cy] = pos[e];
    out += `<circle cx="${cx}" cy="${cy}" r="11" fill="#fff" stroke="#333"/>`;
    out += `<text x="${cx}" y="${cy + 4}" text-anchor="middle">${esc(e)}</text>`;
  }
  svg.innerHTML = out;
}

function analyze() {
  const r = JSON.parse(analyze_algebra($("algebra").value, $("goal").value));
  const out = $("analysis");
  if (r.error) {
    out.innerHTML = `<p class="bad">${esc(r.error)}</p>`;
    $("hasse").innerHTML = "";
    return;
  }
  if (!r.axioms_pass) {
    $("hasse").innerHTML = "";
    out.innerHTML =
      `<p>${flag(false, "", "axioms fail")}</p><ul>` +
      r.violations.map((v) => `<li>${esc(v.axiom)} at (${v.witness.map(esc).join(", ")}): ${esc(v.message)}</li>`).join("") +
      "</ul>";
    return;
  }
  drawHasse(r.elements, r.covers);
  const rep = r.representation;
  let html = `<p>${flag(true, "axioms hold", "")}; ${r.goal} witness set ${flag(r.found, "found", "not found")}`;
  if (!r.found) html += ` (no state for ${r.states.failures.map((p) => "(" + p.map(esc).join(", ") + ")").join(", ")})`;
  html += `</p><p>${rep.witnesses} witness state(s); representation is ${flag(rep.injective, "injective", "not injective")},
    ${flag(rep.order_reflecting, "order reflecting", "not order reflecting")}.</p>`;
  html += "<table class=m><tr><th>element</th><th>diag(s(a))</th></tr>";
  for (const op of rep.operators) html += `<tr><td>${esc(op.element)}</td><td>(${op.diag.map(esc).join(", ")})</td></tr>`;
  html += "</table>";
  out.innerHTML = html;
}

function matrix(prefix) {
  return new Float64Array(["11", "22", "re", "im"].map((k) => Number($(prefix + k).value)));
}

function compare() {
  const r = JSON.parse(effect_witness(matrix("a"), matrix("b")));
  const out = $("witness");
  if (r.error) {
    out.innerHTML = `<p class="bad">${esc(r.error)}</p>`;
    return;
  }
  const fmt = (xs) => xs.map((x) => x.toFixed(4)).join(", ");
  let html = `<p>eigenvalues of B - A: ${fmt(r.difference_eigenvalues)}; `;
  html += r.a_leq_b ? `${flag(true, "A &le; B", "")}</p>` : `${flag(false, "", "A is not below B")}</p>`;
  if (r.witness) {
    const v = r.witness.vector.map(([re, im]) => `${re.toFixed(4)}${im < 0 ? "-" : "+"}${Math.abs(im).toFixed(4)}i`);
    html += `<p>x = (${v.join(", ")}): &lt;x,Ax&gt; = ${r.witness.omega_a.toFixed(6)} &gt; &lt;x,Bx&gt; = ${r.witness.omega_b.toFixed(6)}</p>`;
  }
  html += `<p>A + B is ${r.sum_is_effect ? "" : "not "}an effect.</p>`;
  out.innerHTML = html;
}

function demo() {
  const r = JSON.parse(demo_excd());
  $("demo-out").innerHTML = `<pre>${esc(JSON.stringify(r, null, 2))}</pre>`;
}

await init();
$("algebra").value = JSON.stringify(DIAMOND, null, 1);
$("analyze").onclick = analyze;
$("random").onclick = () => {
  const t = random_gea(Number($("rn").value), Number($("rseed").value));
  const parsed = JSON.parse(t);
  if (parsed.error) {
    $("analysis").innerHTML = `<p class="bad">${esc(parsed.error)}</p>`;
    return;
  }
  $("algebra").value = t;
  analyze();
};
$("compare").onclick = compare;
$("demo").onclick = demo;
analyze();
