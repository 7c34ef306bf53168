import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    testTimeout: 60000,
    hookTimeout: 60000,
    // The integration file owns one live server; keep files sequential.
    fileParallelism: false,
  },
});
