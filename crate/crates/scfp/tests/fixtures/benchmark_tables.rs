const BASELINE_FROM_6: [&str; 25] = ["6.000000000000000", "3.952380952380953", "2.603552532123961", "1.715038572748323", "1.129747631254848", "0.744198836461527", "0.490226217669101", "0.322926794178852", "0.212721618387657", "0.140126145445837", "0.092305318031782", "0.060804296798713", "0.040053624081692", "0.026384530149051", "0.017380285733105", "0.011448918379744", "0.007541747821577", "0.004967976739610", "0.003272556106251", "0.002155731403324", "0.001420045289491", "0.000935426658951", "0.000616193751531", "0.000405905407755", "0.000267382133680"];
const BASELINE_FROM_3: [&str; 25] = ["3.000000000000000", "1.976190476190476", "1.301776266061980", "0.857519286374162", "0.564873815627424", "0.372099418230763", "0.245113108834550", "0.161463397089426", "0.106360809193828", "0.070063072722919", "0.046152659015891", "0.030402148399357", "0.020026812040846", "0.013192265074526", "0.008690142866553", "0.005724459189872", "0.003770873910789", "0.002483988369805", "0.001636278053126", "0.001077865701662", "0.000710022644746", "0.000467713329475", "0.000308096875766", "0.000202952703877", "0.000133691066840"];
const INERTIAL_FROM_6: [&str; 26] = ["6.000000000000000", "6.000000000000000", "3.619047619047619", "1.895691609977324", "0.935536119209589", "0.448463346033803", "0.211743715446802", "0.099161777690750", "0.046230552782580", "0.021499741213269", "0.009984698383769", "0.004633400207604", "0.002149195900795", "0.000996658595214", "0.000462122906281", "0.000214257130203", "0.000099333191262", "0.000046051417968", "0.000021349403266", "0.000009897492260", "0.000004588415591", "0.000002127155711", "0.000000986132411", "0.000000457162771", "0.000000211936762", "0.000000098252052"];
const INERTIAL_FROM_3: [&str; 26] = ["3.000000000000000", "3.000000000000000", "1.809523809523810", "0.947845804988662", "0.467768059604794", "0.224231673016901", "0.105871857723401", "0.049580888845375", "0.023115276391290", "0.010749870606634", "0.004992349191885", "0.002316700103802", "0.001074597950397", "0.000498329297607", "0.000231061453140", "0.000107128565101", "0.000049666595631", "0.000023025708984", "0.000010674701633", "0.000004948746130", "0.000002294207795", "0.000001063577855", "0.000000493066206", "0.000000228581385", "0.000000105968381", "0.000000049126026"];
const CASE_1: [&str; 26] = ["8.000000000000000", "6.000000000000000", "3.377777777777778", "1.721058201058201", "0.838240362811791", "0.399106638351990", "0.187756126213986", "0.087753474664804", "0.040866855325218", "0.018993685640912", "0.008817840710380", "0.004091135325752", "0.001897463197705", "0.000879868148248", "0.000407956623136", "0.000189140064894", "0.000087687565450", "0.000040652198275", "0.000018846265776", "0.000008737031945", "0.000004050429155", "0.000001877748043", "0.000000870508717", "0.000000403560514", "0.000000187087193", "0.000000086732002"];
const CASE_2: [&str; 26] = ["8.000000000000000", "6.000000000000000", "2.744444444444444", "1.144272486772487", "0.466087018140590", "0.189975923807574", "0.078232012035175", "0.032653990359057", "0.013817459596190", "0.005919919253122", "0.002563483589793", "0.001119925006272", "0.000492820722007", "0.000218143669935", "0.000097023225097", "0.000043322501787", "0.000019407189700", "0.000008717532223", "0.000003924876204", "0.000001770586219", "0.000000800115466", "0.000000362109760", "0.000000164098265", "0.000000074452809", "0.000000033815734", "0.000000015373490"];
const CASE_3: [&str; 26] = ["8.000000000000000", "6.000000000000000", "2.654166666666667", "1.062511878654971", "0.414427676387483", "0.161779387393689", "0.063949280327919", "0.025716452398678", "0.010529812239421", "0.004384796405912", "0.001853018708577", "0.000792847940813", "0.000342702850470", "0.000149359689904", "0.000065532491396", "0.000028909875185", "0.000012810851869", "0.000005697993156", "0.000002542263894", "0.000001137292866", "0.000000509937772", "0.000000229101124", "0.000000103109472", "0.000000046477831", "0.000000020979640", "0.000000009481898"];
const CASE_4: [&str; 26] = ["8.000000000000000", "6.000000000000000", "2.606770833333333", "0.982533042700857", "0.349299329383015", "0.121333554378606", "0.042025571691499", "0.014715172964500", "0.005259407015600", "0.001930698716925", "0.000730010427044", "0.000284254326726", "0.000113709462464", "0.000046557372423", "0.000019431460606", "0.000008235195533", "0.000003532346658", "0.000001529413756", "0.000000667071982", "0.000000292643349", "0.000000128980891", "0.000000057064087", "0.000000025326458", "0.000000011270697", "0.000000005027255", "0.000000002246927"];
