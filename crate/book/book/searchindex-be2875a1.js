window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","dynamics.html#the-dynamics","dynamics.html#the-model","dynamics.html#fixed-points-and-the-consensus-point","dynamics.html#simulation","schedules.html#pressure-schedules","schedules.html#large-pressures-and-the-overflow-cap","contraction.html#contraction-constants","contraction.html#the-iteration-matrix","contraction.html#the-spectral-constant","contraction.html#the-observed-ratio","contraction.html#the-chained-error-bound","products.html#products-of-contractions","products.html#why-products-not-factors","products.html#log-domain-accumulation","products.html#classification","scenarios.html#the-two-canned-scenarios","scenarios.html#convergent-ρ_k--k","scenarios.html#oscillating-ρ_k--2k","scenarios.html#scalar-scenarios","cli.html#command-line-and-file-formats","cli.html#exit-codes","cli.html#scenario-configuration","cli.html#trajectory-csv","cli.html#analysis-json","cli.html#one-shot-reproduction","cli.html#environment"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":2.449489742783178},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":13,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,",":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"^":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":2.449489742783178},"22":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,"1":{"docs":{"9":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"3":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}},"8":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"1":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"3":{"tf":1.0}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"0":{"tf":2.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}}},"4":{"docs":{"10":{"tf":1.0}},"df":1},"5":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":2.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}},"/":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0}},"df":1}}}},"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}}},"7":{"docs":{"3":{"tf":1.0}},"df":1,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}}},"8":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"25":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}},"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"1":{"docs":{"10":{"tf":1.0},"13":{"tf":2.23606797749979},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":8,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":2.6457513110645907},"22":{"tf":2.8284271247461903},"24":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":15},"1":{"docs":{"3":{"tf":1.0}},"df":1},"3":{"docs":{},"df":0,"·":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"^":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"5":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"√":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}},"2":{"docs":{"13":{"tf":1.0}},"df":1},"k":{"docs":{"17":{"tf":1.0}},"df":1},"n":{"docs":{"13":{"tf":1.0}},"df":1}},"0":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0},"9":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}},".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}},"0":{"docs":{"13":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2,"0":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"2":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}},"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1},"5":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"4":{"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":3},"5":{"docs":{"9":{"tf":1.0}},"df":1},"6":{"docs":{"15":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"df":3},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"2":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":2.0},"17":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":7},"3":{"docs":{"14":{"tf":1.0}},"df":1},"4":{"docs":{"13":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2},"5":{"docs":{"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":3},"7":{"docs":{"20":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}},"e":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":2.0},"14":{"tf":1.7320508075688772},"15":{"tf":2.449489742783178},"17":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"3":{"tf":2.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":13,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"26":{"tf":1.0},"6":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"6":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"·":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}}}},"5":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"2":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6}},"/":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1}},"0":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{"14":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"√":{"docs":{},"df":0,"4":{"docs":{"5":{"tf":1.0}},"df":1},"k":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951}},"df":2}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"·":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"q":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"3":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}},"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"4":{"docs":{},"df":0,"7":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"8":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}},"0":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}}},"4":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1},"7":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}},"e":{"docs":{"0":{"tf":1.0}},"df":1}},"5":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"df":3,"0":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2},"1":{"docs":{"4":{"tf":1.0}},"df":1}}},"6":{"docs":{"3":{"tf":1.0}},"df":1},"8":{"docs":{"20":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"9":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0}},"df":3,"·":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1},"j":{"docs":{"2":{"tf":1.4142135623730951}},"df":1},"k":{"docs":{"0":{"tf":2.23606797749979},"13":{"tf":1.4142135623730951},"14":{"tf":2.23606797749979},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":2.23606797749979},"6":{"tf":1.0}},"df":9,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"ρ":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"≥":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1}},"≤":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"+":{"docs":{},"df":0,"b":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"ρ":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{"2":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}},"v":{"docs":{"15":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7,"’":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":17}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1,"g":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"23":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}},"z":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"p":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.4142135623730951}},"df":1},"1":{"docs":{"3":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1},"1":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0}},"df":1},"1":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"14":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}},"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"v":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"[":{"docs":{},"df":0,"4":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"15":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"4":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"0":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":6,"^":{"docs":{},"df":0,"√":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}},"t":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"13":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.0}},"df":1},"p":{"docs":{"13":{"tf":1.0},"26":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0}},"df":4}}},"s":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"f":{"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0}},"df":3,"=":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{"17":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3},"s":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.7320508075688772}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":2.0}},"df":3,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":2.449489742783178},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":2.0},"2":{"tf":1.4142135623730951},"20":{"tf":2.0},"23":{"tf":1.0},"3":{"tf":2.449489742783178},"4":{"tf":1.0}},"df":10}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":9}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.449489742783178},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"x":{"docs":{"2":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"’":{"docs":{"10":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":2.0},"26":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"·":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"d":{"docs":{"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":3},"j":{"docs":{"11":{"tf":1.0}},"df":1},"k":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"17":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}},"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{"9":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{"11":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"r":{"docs":{"20":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.7320508075688772}},"df":1},"{":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":7}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.4142135623730951}},"df":1},"t":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"25":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}},"q":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"8":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"20":{"tf":1.0}},"df":4,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1},"s":{"docs":{"6":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0},"5":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.4142135623730951}},"df":1},"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"20":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"4":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":2.0},"15":{"tf":1.4142135623730951},"24":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7}}}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"21":{"tf":2.23606797749979}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"r":{"docs":{"18":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}},"x":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"3":{"tf":2.449489742783178},"4":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":9}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.7320508075688772},"18":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}},"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":17},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"10":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}},"p":{"docs":{"13":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}},"o":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":2.0},"3":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,".":{"docs":{"14":{"tf":1.0}},"df":1},"/":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":6}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":2.0},"6":{"tf":1.4142135623730951}},"df":6,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,",":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"2":{"docs":{"2":{"tf":1.0}},"df":1},"=":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1},"2":{"docs":{"13":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951}},"df":2}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.0}},"df":1}}},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{"3":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1},"v":{"docs":{"6":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}},"f":{"docs":{"20":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{"4":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}}},"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"ρ":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"1":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"g":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}},"·":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1}}},"m":{"docs":{"8":{"tf":2.23606797749979},"9":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{"8":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":17}},"k":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.4142135623730951},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"p":{"docs":{"13":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1},"x":{"docs":{"2":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"x":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"ᵀ":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"g":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.7320508075688772}},"df":1,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14},"n":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":12,"c":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"df":3},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"20":{"tf":1.7320508075688772},"25":{"tf":1.0}},"df":3,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":5,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{"14":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":2.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"22":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":7,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}},"h":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{"25":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.23606797749979},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":3.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":13}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":8,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0}},"df":6}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.6457513110645907},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":2.0},"26":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":9,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"26":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"df":2,"t":{"docs":{"0":{"tf":2.449489742783178},"11":{"tf":2.23606797749979},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":2.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":11,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"q":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}},"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"q":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}},"g":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}}},"w":{"docs":{"15":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":4}},"d":{"docs":{"6":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{"2":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"l":{"docs":{"13":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"9":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0},"9":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"9":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"9":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0}},"df":5}},"t":{"docs":{"15":{"tf":1.0}},"df":1}},"w":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"n":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":10,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"df":3}}},"’":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{"11":{"tf":1.4142135623730951},"2":{"tf":2.0},"3":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.0}},"df":5,"(":{"docs":{},"df":0,"x":{"docs":{"3":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":4}},"a":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":4}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"25":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":10,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"w":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}},"m":{"docs":{"18":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":6}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}},"v":{"docs":{"3":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"16":{"tf":2.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":10,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1},"1":{"docs":{"2":{"tf":1.0}},"df":1},"9":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"y":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":2.23606797749979},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18,"(":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}},"h":{"docs":{"6":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"m":{"docs":{"11":{"tf":1.0},"15":{"tf":2.0},"2":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}},"y":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"3":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"6":{"docs":{"3":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}},"x":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":11,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0}},"df":4}},"x":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"p":{"docs":{"13":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}},"p":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":11}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}},"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"/":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"/":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}},"p":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0}},"df":2,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"s":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.0}},"df":1}}},"v":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}},"u":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":2.449489742783178},"6":{"tf":1.0},"9":{"tf":1.0}},"df":10}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.7320508075688772}},"df":1},"1":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7},"5":{"docs":{"5":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"2":{"tf":2.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":7}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"y":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":5}}}},"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{"15":{"tf":2.0}},"df":1,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}}},"x":{"docs":{"10":{"tf":1.4142135623730951},"2":{"tf":2.23606797749979},"23":{"tf":1.0},"3":{"tf":2.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"df":7,"*":{"docs":{},"df":0,"(":{"docs":{},"df":0,"ρ":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.4142135623730951}},"df":1},"{":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}},"0":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3},"_":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1},"j":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2},"k":{"docs":{"11":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}},"̄":{"docs":{},"df":0,"·":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}},"⁺":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"y":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"z":{"docs":{"3":{"tf":1.7320508075688772}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"z":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"√":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4},"p":{"docs":{"6":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":7}}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":7}},"x":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":7}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}},"k":{"docs":{"17":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":7}}},"o":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"25":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0}},"df":4}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":5}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}}}},"title":{"root":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"√":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1},"p":{"docs":{"6":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"x":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}},"k":{"docs":{"17":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"25":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"pressure-consensus simulates a classic opinion-dynamics model: agents on a\\nweighted graph repeatedly blend their own preferred state with their\\nneighbors’ current states, and a peer-pressure weight ρ_k grows over\\ntime, tilting each agent further toward its neighbors. Intuition says rising pressure forces consensus. Every single step is indeed\\na contraction toward a step-specific fixed point, and those fixed points\\nconverge to a well-defined consensus value — the stubbornness-weighted mean\\nof the preferences. The surprise is that the iterates themselves need not\\nget there. Raise the pressure too fast and the system locks into a\\npermanent oscillation around the consensus point instead of settling on it. The decisive quantity is the running product of the per-step contraction\\nconstants α_k. If Π α_k → 0, the composed iteration reaches the\\nconsensus point; if the product stalls at a positive value, convergence is\\nno longer guaranteed — and the library’s flagship scenario shows it really\\ncan fail: #![allow(unused)] fn main() {\\nuse pressure_consensus::experiments::{run_convergent, run_counterexample}; // ρ_k = k: the product of contraction constants telescopes to zero and the\\n// two agents meet at the consensus point (0.3, 0.3).\\nlet nice = run_convergent(2_000)?;\\nassert!(nice.converged); // ρ_k = 2^√k: the product stalls at ≈ 0.031 > 0 and the same two agents\\n// oscillate around (0.3, 0.3) forever, staying a fixed distance away.\\nlet stuck = run_counterexample(2_000)?;\\nassert!(!stuck.converged);\\nassert!(stuck.residual_floor > 4e-3); Ok::<(), pressure_consensus::Error>(()) } The crate provides: validated system construction and the exact update rule\\n( The dynamics), pressure schedules with overflow-safe arithmetic for astronomically large\\npressures ( Pressure schedules), per-step contraction constants and the chained error bound\\n( Contraction constants), log-domain products, the Euler function, and a tail classifier\\n( Products of contractions), deterministic scenario runners ( The two canned scenarios), a CLI emitting plot-ready CSV and JSON\\n( Command line and file formats). Every code block in this guide compiles and runs as a doc-test of the crate,\\nso the book cannot drift from the API.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"","breadcrumbs":"The dynamics » The dynamics","id":"1","title":"The dynamics"},"10":{"body":"norm_ratio measures what one step actually did to the distance: #![allow(unused)] fn main() {\\nuse pressure_consensus::{OpinionSystem, StateVector}; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?; // For this system the ratio is exactly ρ/(1+ρ), independent of the state.\\nlet x = StateVector::new(vec![0.0, 1.0])?;\\nassert!((sys.norm_ratio(1.0, &x)? - 0.5).abs() < 1e-12);\\nlet y = StateVector::new(vec![0.9, -0.4])?;\\nassert!((sys.norm_ratio(99.0, &y)? - 0.99).abs() < 1e-12); // Querying the ratio at the fixed point itself is a hard error.\\nlet fp = sys.fixed_point(2.0)?;\\nassert!(sys.norm_ratio(2.0, &fp).is_err()); Ok::<(), pressure_consensus::Error>(()) } The observed ratio never exceeds the spectral constant (up to rounding) —\\none of the crate’s property tests drives random systems and states through\\nexactly that inequality.","breadcrumbs":"Contraction constants » The observed ratio","id":"10","title":"The observed ratio"},"11":{"body":"Contraction per step composes into a bound on the whole trajectory. With E_k = ‖x_k − x*_k‖₂, D_k = ‖x*_{k+1} − x*_k‖₂ and one triangle\\ninequality per step, E_{k+1} ≤ α_{k+1} (E_k + D_k) which unrolls into a product-weighted sum over the history: the initial\\nerror is damped by Π_{i≥2} α_i while each fixed-point drift D_j is\\ndamped by the product of the factors after it. telescoped_bounds\\nevaluates the recursion alongside a recorded trajectory, and telescoped_slacks reports R_k − E_k, which must never be meaningfully\\nnegative: #![allow(unused)] fn main() {\\nuse pressure_consensus::contraction::{ContractionReport, SystemAlphas};\\nuse pressure_consensus::{telescoped_slacks, OpinionSystem, PressureSchedule}; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?;\\nlet schedule = PressureSchedule::ExpSqrt { base: 2.0 };\\nlet traj = sys.simulate(&schedule, 200)?;\\nlet report = ContractionReport::from_source( &SystemAlphas { system: &sys, schedule: &schedule }, 200, 1e-12,\\n)?; let slacks = telescoped_slacks(&traj, &report.alphas);\\nassert!(slacks.iter().all(|s| *s >= -1e-9)); Ok::<(), pressure_consensus::Error>(()) } This bound is also the cleanest way to see why a vanishing product\\nmatters: every term in it carries a product of α’s, so if the products\\ndie out, the bound — and with it the distance to the moving fixed points —\\nis squeezed to zero.","breadcrumbs":"Contraction constants » The chained error bound","id":"11","title":"The chained error bound"},"12":{"body":"","breadcrumbs":"Products of contractions » Products of contractions","id":"12","title":"Products of contractions"},"13":{"body":"Each step contracts by α_k < 1, and the per-step fixed points converge.\\nNeither fact alone makes the iterates converge: after N steps the initial\\nerror has only been multiplied by P_N = Π_{k≤N} α_k. Convergence to the\\nconsensus point is guaranteed when P_N → 0; when P_N stalls at a\\npositive value the composed map can permanently trap a fraction of the\\ninitial error — that is precisely what the oscillating demo scenario does. Two scalar families make the dichotomy vivid (see also the scenarios chapter): f_k(x) = ((k−1)/k)·x — factors 1/2, 2/3, 3/4, … telescope to P_N = 1/N → 0: composition reaches the fixed point 0. f_k(x) = (1 − q^k)·x — factors race toward 1 so fast that the product\\nconverges to the Euler function φ(q) > 0: composition stalls at φ(q)·x. #![allow(unused)] fn main() {\\nuse pressure_consensus::{euler_phi, scalar_compose, scalar_compose_from, ScalarFamily}; // Telescoping: x/K exactly (started at k=2; the literal k=1 factor is 0).\\nlet tele = ScalarFamily::Telescoping;\\nlet v = scalar_compose(&tele, 1.0, 100);\\nassert!((v - 0.01).abs() < 1e-14);\\nassert_eq!(scalar_compose_from(&tele, 1.0, 100, 1), 0.0); // Geometric gaps: the composition lands on φ(0.1) ≈ 0.89001, not 0.\\nlet geo = ScalarFamily::geometric_gap(0.1)?;\\nlet v = scalar_compose(&geo, 1.0, 200);\\nlet phi = euler_phi(0.1, 1e-12)?;\\nassert!((v - phi).abs() < 1e-10);\\nassert!((phi - 0.89001).abs() < 1e-5); Ok::<(), pressure_consensus::Error>(()) } euler_phi(q, tol) truncates Π (1 − qⁿ) once the geometric tail bound q^{n+1}/(1−q) drops below tol, which caps the relative truncation error\\nat 2·tol/(1−q).","breadcrumbs":"Products of contractions » Why products, not factors","id":"13","title":"Why products, not factors"},"14":{"body":"Products of thousands of factors below one underflow long before they stop\\ncarrying information. partial_product therefore accumulates Σ ln α_k with Neumaier compensation and exponentiates once; an exact zero\\nfactor short-circuits to an exact 0. Factor sources implement AlphaSource\\nand can hand over ln α_k directly — the schedule-ratio source computes ln(ρ/(1+ρ)) = −ln1p(1/ρ), which stays exact even when the plain ratio\\nrounds to 1.0 (that happens from ρ ≈ 9·10^15 on, i.e. from step k ≈ 2809\\nof the 2^√k schedule): #![allow(unused)] fn main() {\\nuse pressure_consensus::{partial_product, PressureRatioAlphas, PressureSchedule, SliceAlphas}; // ρ_k = k gives α_k = k/(k+1): the product telescopes to 1/(N+1).\\nlet linear = PressureSchedule::Linear { slope: 1.0 };\\nlet p = partial_product(&PressureRatioAlphas(&linear), 9)?;\\nassert!((p - 0.1).abs() < 1e-13); // ρ_k = 2^√k: the product converges to ≈ 0.0310128 — positive.\\nlet expsqrt = PressureSchedule::ExpSqrt { base: 2.0 };\\nlet p = partial_product(&PressureRatioAlphas(&expsqrt), 10_000)?;\\nassert!((p - 0.0310128).abs() < 1e-4); // Explicit factors work too.\\nlet p = partial_product(&SliceAlphas(&[0.5; 10]), 10)?;\\nassert!((p - 2f64.powi(-10)).abs() < 1e-15); Ok::<(), pressure_consensus::Error>(()) }","breadcrumbs":"Products of contractions » Log-domain accumulation","id":"14","title":"Log-domain accumulation"},"15":{"body":"A finite computation cannot prove an infinite product vanishes, so the\\nclassifier is explicit about its epistemics. ContractionReport runs the\\nfactors once and labels the tail: VanishesNumerically — the log sum crossed ln floor (or a factor\\nwas exactly zero). The product is numerically dead. PositiveLimitSuspected — the divergence witness Σ (1 − α_k)\\ngained less than 1e-12 over the last tenth of the horizon. A stalled\\nwitness sum is the numerical signature of a convergent sum, and Π α_k > 0 exactly when Σ (1 − α_k) < ∞. Inconclusive — neither signal fired; the report carries the raw\\nseries so callers can judge for themselves. #![allow(unused)] fn main() {\\nuse pressure_consensus::{classify_product, PressureRatioAlphas, PressureSchedule, ProductClass}; let linear = PressureSchedule::Linear { slope: 1.0 };\\nlet expsqrt = PressureSchedule::ExpSqrt { base: 2.0 }; // 1/(N+1) only reaches 1e-12 around N = 10^12: within 10^6 steps the floor\\n// is not crossed and the witness keeps growing like ln N.\\nassert_eq!( classify_product(&PressureRatioAlphas(&linear), 1_000_000, 1e-12)?, ProductClass::Inconclusive,\\n);\\n// A friendlier floor is crossed within the horizon.\\nassert_eq!( classify_product(&PressureRatioAlphas(&linear), 1_000_000, 1e-5)?, ProductClass::VanishesNumerically,\\n);\\n// The witness Σ 1/(1+2^√k) converges: stall detected.\\nassert_eq!( classify_product(&PressureRatioAlphas(&expsqrt), 10_000, 1e-12)?, ProductClass::PositiveLimitSuspected,\\n); Ok::<(), pressure_consensus::Error>(()) } The report also stores the running products themselves (saturated at the\\nsmallest positive normal float rather than flushed to zero) and the\\ncompensated log sum; the two routes cross-check each other to nine digits\\nwhenever the product is above 1e-300.","breadcrumbs":"Products of contractions » Classification","id":"15","title":"Classification"},"16":{"body":"Both scenarios run the same two-agent demo system — complete graph K₂,\\nunit weights and stubbornness, preferred states (0.1, 0.5), initial state\\nequal to the preferences — and differ only in how fast the pressure rises.\\nThe consensus point is (0.3, 0.3) either way. Scenario runners are pure:\\nrerunning one reproduces its result bit for bit, and the first n states of\\na longer run equal a shorter run’s states exactly.","breadcrumbs":"The two canned scenarios » The two canned scenarios","id":"16","title":"The two canned scenarios"},"17":{"body":"The contraction constants are α_k = k/(k+1), whose product telescopes to 1/(N+1) → 0. The iterates reach the consensus point with an error\\nenvelope on the order of 1/k: #![allow(unused)] fn main() {\\nuse pressure_consensus::experiments::run_convergent; let result = run_convergent(10_000)?;\\nassert!(result.converged);\\nassert!(result.final_dist_inf() < 1e-3); // The product criterion quantities come along in the report.\\nlet p = result.report.final_partial_product();\\nassert!((p - 1.0 / 10_001.0).abs() < 1e-12); Ok::<(), pressure_consensus::Error>(()) } A quirk worth knowing when eyeballing its trajectory: for this exact\\nsystem and start, the iterate lands on the consensus point every other\\nstep (the distance sequence alternates between ~0 and 0.2/(k+1)), so the\\nper-step distance zigzags while its pairwise-max envelope decays cleanly.","breadcrumbs":"The two canned scenarios » Convergent: ρ_k = k","id":"17","title":"Convergent: ρ_k = k"},"18":{"body":"Pressures explode — 2^100 ≈ 1.3·10^30 by step 10^4 — and the constants α_k = ρ_k/(1+ρ_k) approach 1 so fast that their product stalls at ≈ 0.0310128 > 0. The iterates slam into a permanent oscillation around\\nthe consensus point: the two agents swap sides every step and never get\\ncloser than a fixed floor. #![allow(unused)] fn main() {\\nuse pressure_consensus::experiments::run_counterexample;\\nuse pressure_consensus::ProductClass; let result = run_counterexample(10_000)?;\\nassert!(!result.converged);\\nassert_eq!(result.report.classification, ProductClass::PositiveLimitSuspected); // The tail window [steps/10, steps] stays a fixed distance from consensus.\\nassert!(result.residual_floor > 4.7e-3); // Agent 0 alternates sides of the consensus value every step.\\nlet late = &result.trajectory.states[9_000..9_010];\\nfor pair in late.windows(2) { assert!((pair[0][0] - 0.3) * (pair[1][0] - 0.3) < 0.0);\\n} Ok::<(), pressure_consensus::Error>(()) } The residual_floor is measured over the tail window [steps/10, steps],\\nfar past the initial transient in which the system does rush toward\\nconsensus — the failure only reveals itself in the long run, which is what\\nmakes this scenario a good stress test for convergence claims.","breadcrumbs":"The two canned scenarios » Oscillating: ρ_k = 2^√k","id":"18","title":"Oscillating: ρ_k = 2^√k"},"19":{"body":"The scalar families of the products chapter have a matching\\nrunner that records the composed orbit: #![allow(unused)] fn main() {\\nuse pressure_consensus::experiments::run_scalar_family;\\nuse pressure_consensus::ScalarFamily; let geo = ScalarFamily::geometric_gap(0.1)?;\\nlet r = run_scalar_family(&geo, 1.0, 200);\\nassert!((r.limit_estimate - 0.89001).abs() <= 1e-5);\\nassert!(!r.converged_to_fixed_point); let r = run_scalar_family(&ScalarFamily::Telescoping, 1.0, 10_000);\\nassert!((r.limit_estimate - 1e-4).abs() < 1e-12);\\nassert!(r.converged_to_fixed_point); Ok::<(), pressure_consensus::Error>(()) }","breadcrumbs":"The two canned scenarios » Scalar scenarios","id":"19","title":"Scalar scenarios"},"2":{"body":"An OpinionSystem bundles a weighted adjacency matrix A with zero diagonal and nonnegative\\nentries, whose nonzero support must form a connected graph, strictly positive per-agent stubbornness coefficients s_i, and preferred states x⁺ (the paper-standard range is [0, 1], but any\\nfinite reals work). Row sums d_i = Σ_j A_ij are cached at construction. With S and D the\\ncorresponding diagonal matrices and a pressure ρ > 0, one synchronous\\nupdate is x ← (S + ρD)⁻¹ (S x⁺ + ρ A x) Because S + ρD is diagonal, each component is a convex combination x_i ← (s_i x⁺_i + ρ Σ_j A_ij x_j) / (s_i + ρ d_i) of the agent’s preference and its neighbors’ states: small ρ means agents\\nmostly keep their preferences, large ρ means they mostly average with\\ntheir neighbors. #![allow(unused)] fn main() {\\nuse pressure_consensus::{OpinionSystem, StateVector}; // The two-agent demo: complete graph K2, unit weights and stubbornness.\\nlet sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?; let x = StateVector::new(vec![0.1, 0.5])?;\\nlet next = sys.step(&x, 1.0)?;\\n// ((0.1 + 1·0.5)/2, (0.5 + 1·0.1)/2) = (0.3, 0.3)\\nassert!((next[0] - 0.3).abs() < 1e-15);\\nassert!((next[1] - 0.3).abs() < 1e-15); Ok::<(), pressure_consensus::Error>(()) } Validation is strict — a disconnected graph, a negative weight, or a\\nnonpositive stubbornness coefficient is rejected at construction rather\\nthan producing a meaningless “consensus” later: #![allow(unused)] fn main() {\\nuse pressure_consensus::{Error, OpinionSystem}; let isolated = OpinionSystem::new( vec![ vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 0.0], ], vec![1.0, 1.0, 1.0], vec![0.0, 0.5, 1.0],\\n);\\nassert_eq!(isolated.unwrap_err(), Error::DisconnectedGraph { node: 2 }); } Asymmetric adjacency is accepted — the update is perfectly well defined —\\nbut flagged via is_symmetric(), because the consensus point below is only\\nguaranteed for symmetric graphs. The CLI prints a warning in that case.","breadcrumbs":"The dynamics » The model","id":"2","title":"The model"},"20":{"body":"The pressure-consensus binary wraps the library behind three subcommands.\\nAll float output uses 17 significant digits (round-trip exact for f64),\\nUTF-8, and LF line endings; repeated runs produce byte-identical files. $ pressure-consensus simulate --config scenario.json --out trajectory.csv\\n$ pressure-consensus analyze --config scenario.json --steps 10000 --out report.json\\n$ pressure-consensus counterexample --out-dir results/ A global --quiet suppresses informational stderr lines (including the\\nasymmetric-adjacency warning); error lines are always printed.","breadcrumbs":"Command line and file formats » Command line and file formats","id":"20","title":"Command line and file formats"},"21":{"body":"code meaning 0 success 2 configuration failure (unreadable/malformed/invalid config) 3 numeric failure (schedule overflow, certificate failure, …) 4 I/O failure writing outputs Failures print exactly one machine-parseable line to stderr: error: code=NonpositiveStubbornness message=\\"stubbornness[1] must be finite and strictly positive, got -3\\"","breadcrumbs":"Command line and file formats » Exit codes","id":"21","title":"Exit codes"},"22":{"body":"JSON, strict about unknown fields. x0 and tolerance are optional\\n(defaults: the preferred states, 1e-3): { \\"system\\": { \\"adjacency\\": [[0.0, 1.0], [1.0, 0.0]], \\"stubbornness\\": [1.0, 1.0], \\"preferred\\": [0.1, 0.5] }, \\"schedule\\": { \\"kind\\": \\"ExpSqrt\\", \\"params\\": { \\"base\\": 2.0 } }, \\"steps\\": 10000\\n} Schedule kinds and their parameters: Linear {slope}, Power {exponent}, ExpSqrt {base}, Constant {value}, Table {values}. The config type is\\npart of the library, so tools can generate and round-trip configs: #![allow(unused)] fn main() {\\nuse pressure_consensus::config::ScenarioConfig; let text = r#\\"{ \\"system\\": { \\"adjacency\\": [[0.0, 1.0], [1.0, 0.0]], \\"stubbornness\\": [1.0, 1.0], \\"preferred\\": [0.1, 0.5] }, \\"schedule\\": { \\"kind\\": \\"Linear\\", \\"params\\": { \\"slope\\": 2.0 } }, \\"steps\\": 500, \\"tolerance\\": 1e-4\\n}\\"#;\\nlet config = ScenarioConfig::from_json(text).unwrap();\\nlet system = config.validate().unwrap();\\nassert_eq!(system.len(), 2);\\nassert_eq!(ScenarioConfig::from_json(&config.to_json()).unwrap(), config); }","breadcrumbs":"Command line and file formats » Scenario configuration","id":"22","title":"Scenario configuration"},"23":{"body":"simulate writes one row per recorded state: k,rho,x_0,x_1,alpha,partial_product,dist_to_fixed_point,dist_to_limit k = 0 is the initial condition; its per-step columns ( rho, alpha, partial_product, dist_to_fixed_point) are empty. alpha is the spectral contraction constant at ρ_k and partial_product the running product up to k. dist_to_fixed_point is ‖x_k − x*(ρ_k)‖₂, dist_to_limit is ‖x_k − x*‖₂ against the consensus point.","breadcrumbs":"Command line and file formats » Trajectory CSV","id":"23","title":"Trajectory CSV"},"24":{"body":"analyze recomputes the contraction factors for the configured system and\\nschedule (ignoring x0) and writes: { \\"alphas_summary\\": { \\"count\\": 10000, \\"first\\": 0.6666, \\"last\\": 1.0, \\"min\\": 0.6666, \\"max\\": 1.0 }, \\"partial_product_final\\": 0.031012782699722206, \\"log_sum\\": -3.473356956559788, \\"classification\\": \\"PositiveLimitSuspected\\", \\"tail_estimate\\": 3.0154935391322582\\n} (Values abbreviated; classification is one of VanishesNumerically, PositiveLimitSuspected, Inconclusive.)","breadcrumbs":"Command line and file formats » Analysis JSON","id":"24","title":"Analysis JSON"},"25":{"body":"counterexample --out-dir DIR runs both demo scenarios for 10^4 steps\\nand writes counterexample.csv, convergent.csv, and summary.json; the\\nsummary carries each scenario’s classification, final product, residual\\nfloor, final distance, and convergence verdict, plus the Euler-function\\nvalue φ(0.1) ≈ 0.89001 that anchors the positive-product example.","breadcrumbs":"Command line and file formats » One-shot reproduction","id":"25","title":"One-shot reproduction"},"26":{"body":"PRESSURE_CONSENSUS_MAX_RHO overrides the pressure overflow cap (default 1e300). Runs whose schedule crosses the cap exit with code 3 and code=ScheduleOverflow.","breadcrumbs":"Command line and file formats » Environment","id":"26","title":"Environment"},"3":{"body":"For fixed ρ the update map has a unique fixed point: the solution of (S + ρL) x = S x⁺ with L = D − A the graph Laplacian. As ρ → ∞ these\\nfixed points converge to the consensus point: the constant vector holding\\nthe stubbornness-weighted mean Σ s_i x⁺_i / Σ s_i. #![allow(unused)] fn main() {\\nuse pressure_consensus::OpinionSystem; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?; // The consensus point: (0.1 + 0.5)/2 on both components.\\nassert_eq!(sys.consensus_limit().as_slice(), &[0.3, 0.3]); // Fixed points interpolate between preference and consensus. For this\\n// two-agent system the closed form is ((a + ρ(a+b))/(2ρ+1), ...).\\nlet fp = sys.fixed_point(1.0)?;\\nassert!((fp[0] - 0.7 / 3.0).abs() < 1e-14);\\nassert!((fp[1] - 1.1 / 3.0).abs() < 1e-14); // By ρ = 10^6 the fixed point is within 10⁻⁶ of the consensus point.\\nlet fp = sys.fixed_point(1e6)?;\\nassert!((fp[0] - 0.3).abs() < 1e-6); // Fixed points are stationary under the step map.\\nlet again = sys.step(&fp, 1e6)?;\\nassert!((again[0] - fp[0]).abs() < 1e-9); Ok::<(), pressure_consensus::Error>(()) } The solve is done in centered form: writing x = x̄·1 + z with x̄ the\\nconsensus value, L·1 = 0 turns the system into (S + ρL) z = S(x⁺ − x̄·1)\\n— the same equations, but the unknown is the small deviation z = O(1/ρ),\\nso accuracy does not degrade as pressures grow. Past ρ = 10^15 the\\ndeviation falls below one ulp of the state scale and the consensus point is\\nreturned directly.","breadcrumbs":"The dynamics » Fixed points and the consensus point","id":"3","title":"Fixed points and the consensus point"},"4":{"body":"simulate iterates the step map along a schedule, recording every state,\\nthe pressures, the per-step fixed points, and the Euclidean distance to the\\nconsensus point: #![allow(unused)] fn main() {\\nuse pressure_consensus::{OpinionSystem, PressureSchedule}; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?;\\nlet traj = sys.simulate(&PressureSchedule::Linear { slope: 1.0 }, 500)?; assert_eq!(traj.states.len(), 501); // index 0 is the initial condition\\nassert_eq!(traj.rho.len(), 500);\\nassert_eq!(traj.fixed_points.len(), 500);\\nassert!(traj.dist_to_limit[499] < 1e-3); Ok::<(), pressure_consensus::Error>(()) } The initial state defaults to the preferred states; simulate_opts takes an\\nexplicit one plus a pressure cap. Two useful structural facts, both tested\\nas properties of the crate: Affine invariance. Shifting x⁺ and x0 by c·1 shifts every\\ntrajectory state by exactly c·1: the update is affine and its\\ncoefficients sum to one. Convexity. If x⁺ and x0 lie in [0,1]^N, every iterate does too.\\nThis holds in floating point, not just on paper: neighbor sums and row\\nsums accumulate in the same left-to-right order, so the computed convex\\ncombination cannot escape the hull by rounding.","breadcrumbs":"The dynamics » Simulation","id":"4","title":"Simulation"},"5":{"body":"A PressureSchedule is the map k ↦ ρ_k for step indices k ≥ 1. Five\\nkinds cover the cases that matter in practice: kind rule parameter Linear ρ_k = slope · k slope Power ρ_k = k^exponent exponent ExpSqrt ρ_k = base^√k base Constant ρ_k = value value Table explicit list, extended by its final value values Schedules are pure functions of k — no internal state — so a run can be\\nreplayed or extended deterministically. #![allow(unused)] fn main() {\\nuse pressure_consensus::PressureSchedule; let linear = PressureSchedule::Linear { slope: 1.0 };\\nassert_eq!(linear.rho(10), 10.0); let expsqrt = PressureSchedule::ExpSqrt { base: 2.0 };\\nassert_eq!(expsqrt.rho(4), 4.0); // 2^√4\\nassert_eq!(expsqrt.rho(10_000), 2f64.powi(100)); let table = PressureSchedule::Table { values: vec![0.5, 1.5, 8.0] };\\nassert_eq!(table.rho(2), 1.5);\\nassert_eq!(table.rho(1_000), 8.0); // final-value extension }","breadcrumbs":"Pressure schedules » Pressure schedules","id":"5","title":"Pressure schedules"},"6":{"body":"ExpSqrt is deliberately explosive: at k = 10^4 the pressure is already 2^100 ≈ 1.3·10^30, and by k ≈ 10^6 it would leave f64 range entirely.\\nTwo mechanisms keep such schedules usable: Factored coefficients. Beyond ρ = 10^15 the step arithmetic divides\\nnumerator and denominator through by ρ — (s_i/ρ · x⁺_i + Σ A_ij x_j) / (s_i/ρ + d_i) — so nothing overflows and each component remains a convex\\ncombination. The cap. Evaluating a schedule past max_rho (default 1e300)\\naborts the run with ScheduleOverflow instead of feeding degenerate\\nvalues onward. The CLI reads the cap from the environment variable PRESSURE_CONSENSUS_MAX_RHO. #![allow(unused)] fn main() {\\nuse pressure_consensus::{Error, PressureSchedule}; let s = PressureSchedule::ExpSqrt { base: 2.0 };\\nassert!(s.rho_checked(10_000, 1e300).is_ok());\\nassert_eq!( s.rho_checked(100, 10.0), Err(Error::ScheduleOverflow { step: 100, rho: 1024.0, cap: 10.0 }),\\n); } Parameter validation ( slope > 0, base > 0, nonempty positive tables, …)\\nruns before any simulation touches a schedule, so ρ_k > 0 holds for every\\nstep of a validated run.","breadcrumbs":"Pressure schedules » Large pressures and the overflow cap","id":"6","title":"Large pressures and the overflow cap"},"7":{"body":"","breadcrumbs":"Contraction constants » Contraction constants","id":"7","title":"Contraction constants"},"8":{"body":"Subtracting the fixed point from both sides of the update turns the affine\\nstep into a linear one: step(x) − x*(ρ) = M(ρ) (x − x*(ρ)), M(ρ) = (S + ρD)⁻¹ ρA so M(ρ) — entries M_ij = ρ A_ij / (s_i + ρ d_i) — governs exactly how\\ndeviations from the fixed point evolve. Its rows sum to ρ d_i / (s_i + ρ d_i) < 1, making it strictly substochastic. #![allow(unused)] fn main() {\\nuse pressure_consensus::OpinionSystem; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?; // For the two-agent unit system, M(ρ) = ρ/(1+ρ) · [[0,1],[1,0]].\\nlet m = sys.iteration_matrix(3.0)?;\\nassert!((m.get(0, 1) - 0.75).abs() < 1e-15);\\nassert!((m.get(1, 0) - 0.75).abs() < 1e-15);\\nassert_eq!(m.get(0, 0), 0.0); Ok::<(), pressure_consensus::Error>(()) }","breadcrumbs":"Contraction constants » The iteration matrix","id":"8","title":"The iteration matrix"},"9":{"body":"contraction_constant returns ‖M(ρ)‖₂, the largest singular value: the\\ntightest factor α with ‖step(x) − x*‖₂ ≤ α‖x − x*‖₂ for every state.\\nIt is computed by power iteration on MᵀM (residual tolerance 1e-12,\\ncap 10^5 iterations) with a dense Jacobi eigensolve as fallback for small\\nsystems when the leading eigenvalues are too close for power iteration to\\nseparate. For the two-agent unit system the constant has the closed form ρ/(1+ρ): #![allow(unused)] fn main() {\\nuse pressure_consensus::OpinionSystem; let sys = OpinionSystem::new( vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 1.0], vec![0.1, 0.5],\\n)?;\\nfor rho in [0.01, 1.0, 10.0, 1e6] { let alpha = sys.contraction_constant(rho)?; assert!((alpha - rho / (1.0 + rho)).abs() <= 1e-10);\\n} Ok::<(), pressure_consensus::Error>(()) } One honest caveat: the spectral radius of M(ρ) is always below one, but\\nfor heterogeneous stubbornness-to-degree ratios the spectral norm can\\nexceed one. In that regime a single step can transiently increase the\\nEuclidean distance to the fixed point and the 2-norm certificate fails; the\\nfunction reports the true norm, and the product analysis of the next\\nchapter rejects such factors with AlphaOutOfRange instead of pretending.\\nThe max-row-sum bound contraction_constant_inf (always < 1) is\\navailable as a cheap companion diagnostic.","breadcrumbs":"Contraction constants » The spectral constant","id":"9","title":"The spectral constant"}},"docInfo":{"0":{"body":214,"breadcrumbs":2,"title":1},"1":{"body":0,"breadcrumbs":2,"title":1},"10":{"body":76,"breadcrumbs":4,"title":2},"11":{"body":121,"breadcrumbs":5,"title":3},"12":{"body":0,"breadcrumbs":4,"title":2},"13":{"body":162,"breadcrumbs":4,"title":2},"14":{"body":115,"breadcrumbs":5,"title":3},"15":{"body":152,"breadcrumbs":3,"title":1},"16":{"body":50,"breadcrumbs":6,"title":3},"17":{"body":71,"breadcrumbs":6,"title":3},"18":{"body":100,"breadcrumbs":6,"title":3},"19":{"body":39,"breadcrumbs":5,"title":2},"2":{"body":196,"breadcrumbs":2,"title":1},"20":{"body":65,"breadcrumbs":8,"title":4},"21":{"body":36,"breadcrumbs":6,"title":2},"22":{"body":92,"breadcrumbs":6,"title":2},"23":{"body":39,"breadcrumbs":6,"title":2},"24":{"body":36,"breadcrumbs":6,"title":2},"25":{"body":37,"breadcrumbs":7,"title":3},"26":{"body":16,"breadcrumbs":5,"title":1},"3":{"body":150,"breadcrumbs":5,"title":4},"4":{"body":114,"breadcrumbs":2,"title":1},"5":{"body":84,"breadcrumbs":4,"title":2},"6":{"body":107,"breadcrumbs":6,"title":4},"7":{"body":0,"breadcrumbs":4,"title":2},"8":{"body":79,"breadcrumbs":4,"title":2},"9":{"body":129,"breadcrumbs":4,"title":2}},"length":27},"lang":"English"}}'));