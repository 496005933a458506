import { LabClient } from "./api.js";
import { LabApp } from "./app.js";

const root = document.querySelector<HTMLElement>("#app");
if (root) {
  // same-origin: the session service also serves these assets
  void new LabApp(root, new LabClient("")).init();
}
