import init, { catalog, codim, classify } from "./pkg/gpi_web.js";

const $ = (id) => document.getElementById(id);

function show(target, f) {
  const out = $(target);
  out.classList.remove("error");
  out.textContent = "working...";
  // let the page repaint before a long computation
  setTimeout(() => {
    try {
      out.textContent = f();
    } catch (e) {
      out.classList.add("error");
      out.textContent = String(e);
    }
  }, 0);
}

await init();

$("list").onclick = () => show("list-out", () => catalog("text"));
$("codim").onclick = () =>
  show("codim-result", () => codim($("codim-spec").value, Number($("codim-n").value), $("codim-out").value));
$("classify").onclick = () =>
  show("cls-result", () => classify($("cls-spec").value, $("cls-poly").value, "text"));
