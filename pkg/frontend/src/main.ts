import { createExplorerApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? "http://127.0.0.1:7463";

const app = createExplorerApp(document, baseUrl);
void app.solveNow();
